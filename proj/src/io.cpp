#include "qdeform/io.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qdeform {

using nlohmann::json;

json datum_to_json(const datum& d) {
  json letters = json::array();
  for (size_t i = 0; i < d.size(); ++i) {
    json chi = json::array();
    for (size_t r = 0; r < d.group_rank(); ++r)
      chi.push_back(d.chi(i).value(r).str());
    letters.push_back({{"label", d.label(i)},
                       {"degree", d.g(i)},
                       {"block", d.block(i)},
                       {"chi", chi}});
  }
  return json{{"group_rank", d.group_rank()}, {"letters", letters}};
}

datum datum_from_json(const json& j) {
  if (!j.is_object() || !j.contains("group_rank") || !j.contains("letters"))
    throw std::invalid_argument("datum document needs group_rank and letters");
  size_t m = j.at("group_rank").get<size_t>();
  std::vector<grp> degrees;
  std::vector<character> chars;
  std::vector<size_t> blocks;
  std::vector<std::string> labels;
  for (const auto& L : j.at("letters")) {
    grp g = L.at("degree").get<grp>();
    if (g.size() != m)
      throw std::invalid_argument("datum document: degree length mismatch");
    std::vector<scalar> vals;
    for (const auto& s : L.at("chi")) vals.push_back(scalar::parse(s.get<std::string>()));
    if (vals.size() != m)
      throw std::invalid_argument("datum document: chi length mismatch");
    degrees.push_back(std::move(g));
    chars.push_back(character(std::move(vals)));
    blocks.push_back(L.at("block").get<size_t>());
    labels.push_back(L.at("label").get<std::string>());
  }
  datum d(m, std::move(degrees), std::move(chars), std::move(blocks));
  d.set_labels(std::move(labels));
  return d;
}

std::vector<long> find_symmetrizer(const std::vector<std::vector<long>>& cartan) {
  size_t n = cartan.size();
  // propagate ratios d_j/d_i = a_ij/a_ji along edges of each connected
  // component, then clear denominators component-wise
  std::vector<rat> d(n, rat(0));
  std::vector<long> out(n, 0);
  for (size_t root = 0; root < n; ++root) {
    if (d[root] != rat(0)) continue;
    std::vector<size_t> comp{root};
    d[root] = rat(1);
    for (size_t k = 0; k < comp.size(); ++k) {
      size_t i = comp[k];
      for (size_t j = 0; j < n; ++j) {
        if (i == j || cartan[i][j] == 0) continue;
        if (cartan[j][i] == 0)
          throw std::domain_error("find_symmetrizer: asymmetric zero pattern");
        rat dj = d[i] * rat(cartan[i][j]) / rat(cartan[j][i]);
        if (dj <= 0)
          throw std::domain_error("find_symmetrizer: no positive symmetrizer");
        if (d[j] == rat(0)) {
          d[j] = dj;
          comp.push_back(j);
        } else if (d[j] != dj) {
          throw std::domain_error("find_symmetrizer: matrix is not symmetrizable");
        }
      }
    }
    long denom = 1;
    for (size_t i : comp)
      denom = std::lcm(denom, long(d[i].get_den().get_si()));
    for (size_t i : comp) {
      rat v = d[i] * rat(denom);
      out[i] = long(v.get_num().get_si());
    }
    long g = 0;
    for (size_t i : comp) g = std::gcd(g, out[i]);
    for (size_t i : comp) out[i] /= g;
  }
  // final symmetry audit over all pairs, including cross-component zeros
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (out[i] * cartan[i][j] != out[j] * cartan[j][i])
        throw std::domain_error("find_symmetrizer: matrix is not symmetrizable");
  return out;
}

json uq_input_to_json(const uq_input& u) {
  json j{{"cartan_matrix", u.cartan},
         {"symmetrizer", u.sym},
         {"lattice", json{{"pairing", u.pairing}, {"coroot", u.coroot}}}};
  if (u.q0) {
    std::ostringstream os;
    os << *u.q0;
    j["q"] = os.str();
  } else {
    j["q"] = "formal";
  }
  return j;
}

uq_input uq_input_from_json(const json& j) {
  if (!j.is_object() || !j.contains("cartan_matrix"))
    throw std::invalid_argument("input document needs cartan_matrix");
  auto cartan = j.at("cartan_matrix").get<std::vector<std::vector<long>>>();
  std::vector<long> sym = j.contains("symmetrizer")
                              ? j.at("symmetrizer").get<std::vector<long>>()
                              : find_symmetrizer(cartan);
  uq_input u = standard_lattice(cartan, sym);
  if (j.contains("lattice")) {
    const auto& L = j.at("lattice");
    u.pairing = L.at("pairing").get<std::vector<std::vector<long>>>();
    u.coroot = L.at("coroot").get<std::vector<grp>>();
  }
  if (j.contains("q")) {
    std::string qs = j.at("q").get<std::string>();
    if (qs != "formal") {
      rat q0;
      scalar v = scalar::parse(qs);
      if (!v.is_constant(&q0))
        throw std::invalid_argument("q must be \"formal\" or a rational value");
      u.q0 = q0;
    }
  }
  return u;
}

namespace {

size_t letter_by_label(const datum& d, const std::string& label) {
  for (size_t i = 0; i < d.size(); ++i)
    if (d.label(i) == label) return i;
  throw std::invalid_argument("parse_element: unknown letter label " + label);
}

}  // namespace

element<scalar> parse_element(const presentation<scalar>& p,
                              const std::string& text) {
  const datum& d = p.dat();
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("parse_element: empty expression");

  // split into signed terms at top-level + and -
  std::vector<std::pair<long, std::string>> terms;
  long sign = 1;
  size_t start = 0;
  int depth = 0;
  if (s[0] == '-') {
    sign = -1;
    start = 1;
  } else if (s[0] == '+') {
    start = 1;
  }
  size_t pos = start;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && (c == '+' || c == '-') && pos > start &&
        s[pos - 1] != '^' && s[pos - 1] != '*' && s[pos - 1] != '/') {
      terms.push_back({sign, s.substr(start, pos - start)});
      sign = c == '-' ? -1 : 1;
      start = pos + 1;
    }
  }
  terms.push_back({sign, s.substr(start)});

  element<scalar> out;
  for (const auto& [sgn, term] : terms) {
    if (term.empty()) throw std::invalid_argument("parse_element: empty term");
    // the coefficient is everything before the first generator factor
    size_t fpos = term.size();
    for (size_t k = 0; k < term.size(); ++k)
      if (term[k] == 'x' || term[k] == 'K') {
        fpos = k;
        break;
      }
    std::string coeff = term.substr(0, fpos);
    if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    scalar c = coeff.empty() ? scalar(1L) : scalar::parse(coeff);
    element<scalar> val = p.from_term(c * scalar(sgn), {}, grp_zero(d.group_rank()));
    size_t k = fpos;
    while (k < term.size()) {
      if (term[k] == 'x') {
        if (k + 1 >= term.size() || term[k + 1] != '[')
          throw std::invalid_argument("parse_element: expected x[label]");
        size_t close = term.find(']', k + 2);
        if (close == std::string::npos)
          throw std::invalid_argument("parse_element: unterminated label");
        val = p.mul(val, p.x(letter_by_label(d, term.substr(k + 2, close - k - 2))));
        k = close + 1;
      } else if (term[k] == 'K') {
        if (k + 1 >= term.size() || term[k + 1] != '(')
          throw std::invalid_argument("parse_element: expected K(...)");
        size_t close = term.find(')', k + 2);
        if (close == std::string::npos)
          throw std::invalid_argument("parse_element: unterminated group symbol");
        grp g;
        std::stringstream ss(term.substr(k + 2, close - k - 2));
        std::string part;
        while (std::getline(ss, part, ','))
          g.push_back(std::stol(part));
        if (g.size() != d.group_rank())
          throw std::invalid_argument("parse_element: group symbol rank mismatch");
        val = p.mul(val, p.grouplike(g));
        k = close + 1;
      } else if (term[k] == '*') {
        ++k;
      } else {
        throw std::invalid_argument("parse_element: unexpected character '" +
                                    std::string(1, term[k]) + "'");
      }
    }
    out = out + val;
  }
  return out;
}

std::string hilbert_csv(const std::vector<size_t>& ranks) {
  std::string out = "degree,rank\n";
  for (size_t d = 0; d < ranks.size(); ++d)
    out += std::to_string(d) + "," + std::to_string(ranks[d]) + "\n";
  return out;
}

}  // namespace qdeform
