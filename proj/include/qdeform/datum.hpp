// A datum of diagonal type: a finite list of letters, each carrying a degree
// in Z^m and a character of Z^m, partitioned into consecutive blocks.  The
// braiding matrix is q_ij = chi_j(g_i).  Letters in distinct blocks must
// braid trivially in the symmetrized sense (q_ij q_ji = 1); within a block
// the braiding is required to be of finite Cartan type.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qdeform/abgroup.hpp"

namespace qdeform {

using pair_key = std::pair<size_t, size_t>;
using pair_map = std::map<pair_key, scalar>;

// Value lookup defaulting to zero for absent keys.
scalar pair_get(const pair_map& m, size_t i, size_t j);
// True when every key carrying a nonzero value lies in the allowed set.
bool supported_on(const pair_map& m, const std::vector<pair_key>& allowed);

class datum {
 public:
  datum(size_t group_rank, std::vector<grp> degrees, std::vector<character> chars,
        std::vector<size_t> blocks);

  size_t group_rank() const { return m_; }
  size_t size() const { return g_.size(); }  // number of letters
  size_t num_blocks() const { return g_.empty() ? 0 : block_.back() + 1; }
  size_t block(size_t i) const { return block_.at(i); }
  bool same_block(size_t i, size_t j) const { return block(i) == block(j); }
  const grp& g(size_t i) const { return g_.at(i); }
  const character& chi(size_t i) const { return chi_.at(i); }
  const scalar& braiding(size_t i, size_t j) const { return q_.at(i).at(j); }

  // Display labels for the letters; default "0", "1", ...  The quantum-group
  // builders relabel to the signed convention "1", "-1", etc.
  const std::string& label(size_t i) const { return labels_.at(i); }
  void set_labels(std::vector<std::string> labels);

  // Pairs (i, j) with the block of i strictly after the block of j: the
  // letter order that the straightening rules reverse.
  std::vector<pair_key> theta() const;
  // Pairs in theta whose characters are mutually inverse; only these may
  // carry nonzero linking constants.
  std::vector<pair_key> xi() const;

  // The character g -> sigma(g, g_i) / sigma(g_i, g) measuring the failure
  // of the cocycle to be symmetric against the i-th degree.
  character cocycle_character(const bilinear_cocycle& sigma, size_t i) const;
  // The datum with each chi_i multiplied by its cocycle character.
  datum deform(const bilinear_cocycle& sigma) const;
  // Pairs (i, j) in theta with chi_i chi_j equal to the product of the two
  // cocycle characters: the support allowed for linking constants of the
  // twisted algebras.  Depends on sigma only through its skew form.
  std::vector<pair_key> xi_sigma(const bilinear_cocycle& sigma) const;

  // Throws std::domain_error when letters in distinct blocks fail
  // q_ij q_ji = 1, or some q_ii = 1.
  void validate() const;

  // Letters belonging to block b, in order.
  std::vector<size_t> block_letters(size_t b) const;
  // The Cartan matrix of a block, recovered from q_ij q_ji = q_ii^{a_ij};
  // throws std::domain_error when no exponent in [-7, 0] works.
  std::vector<std::vector<long>> block_cartan(size_t b) const;

  bool operator==(const datum& o) const;

 private:
  size_t m_ = 0;
  std::vector<grp> g_;
  std::vector<character> chi_;
  std::vector<size_t> block_;
  std::vector<std::string> labels_;
  std::vector<std::vector<scalar>> q_;  // braiding matrix, cached
};

struct cartan_condition {
  std::string name;
  bool pass = true;
  std::string detail;  // first failure witness, or empty
};

struct cartan_report {
  std::vector<cartan_condition> conditions;
  bool all_pass() const;
  const cartan_condition& find(const std::string& name) const;
};

// Checks the braiding of d against the Cartan matrix `gcm` (indexed by
// letters): the Cartan-type identity, q_ii != 1, invertibility of the
// q-integers up to 1 - a_ij, and the block determinant q_ii q_jj - q_ij q_ji
// for same-block pairs.  When `sym` supplies per-letter symmetrizer entries
// d_i, the power-order and determinant-exponent conditions are evaluated too.
// When `q0` is given every condition is decided after specializing q -> q0;
// otherwise formally, where the order conditions hold automatically.
cartan_report cartan_checks(const datum& d, const std::vector<std::vector<long>>& gcm,
                            const std::vector<long>* sym = nullptr,
                            const rat* q0 = nullptr);

}  // namespace qdeform
