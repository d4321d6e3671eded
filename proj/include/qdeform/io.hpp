#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qdeform/uq.hpp"

namespace qdeform {

// JSON document for a braided datum:
//   {"group_rank": m,
//    "letters": [{"label": "...", "degree": [...], "block": b,
//                 "chi": ["q^2", ...]}, ...]}
// Character values are scalar expressions in q.
nlohmann::json datum_to_json(const datum& d);
datum datum_from_json(const nlohmann::json& j);

// JSON document for a Cartan input:
//   {"cartan_matrix": [[2,-1],[-1,2]],
//    "symmetrizer": [1,1],                       // optional, computed if absent
//    "lattice": {"pairing": [...], "coroot": [...]},  // optional, standard if absent
//    "q": "formal" | "2" | "2/3"}
// Throws std::invalid_argument on malformed documents and std::domain_error
// when no symmetrizer exists.
nlohmann::json uq_input_to_json(const uq_input& u);
uq_input uq_input_from_json(const nlohmann::json& j);

// A positive symmetrizer for a generalized Cartan matrix, with minimal
// entries per connected component; std::domain_error when none exists.
std::vector<long> find_symmetrizer(const std::vector<std::vector<long>>& cartan);

// Parses a linear combination of products of generators against the letters
// of a presentation:  terms are separated by top-level + and -, each term is
// an optional scalar coefficient followed by factors x[label] and
// K(e_1,...,e_m).  The result is multiplied out left to right (hence in
// normal form).  Throws std::invalid_argument on syntax errors or unknown
// labels.
element<scalar> parse_element(const presentation<scalar>& p,
                              const std::string& text);

// Two-column CSV table "degree,rank" of a rank sequence indexed from 0.
std::string hilbert_csv(const std::vector<size_t>& ranks);

}  // namespace qdeform
