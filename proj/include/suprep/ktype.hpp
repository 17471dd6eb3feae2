#pragma once

// k-type multiplicity bounds for modules induced from g_0 to g.
//
// U(g) = U(g_0) R with R spanned by ordered products of distinct odd basis
// elements, so every k-isotypic component V_p of the induced module sits in
// R (x) sum_{q in Q} M_q with Q = {q : q* < r (x) p* for some k-type r of R}.
// Hence dim V_p <= dim(R) * sum_{q in Q} mult_M(q).
//
// Table format:
//   # comment
//   complete: yes|no         unlisted weights have multiplicity 0 (yes) or are unknown (no)
//   integral_default: 1      optional: multiplicity of every unlisted integral weight
//   0 = 1                    weight coordinates (one per cartan element) = multiplicity

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "suprep/algebra.hpp"
#include "suprep/algebra_io.hpp"
#include "suprep/enveloping.hpp"
#include "suprep/error.hpp"

namespace suprep {

using KType = std::vector<Scalar>;

struct KTypeTable {
  std::map<KType, unsigned long> entries;
  std::optional<unsigned long> integral_default;
  bool complete = true;

  /// nullopt when the table does not determine the multiplicity.
  std::optional<unsigned long> multiplicity(const KType& q) const {
    if (auto it = entries.find(q); it != entries.end()) return it->second;
    if (integral_default) {
      bool integral = true;
      for (const auto& c : q)
        if (!c.is_real() || c.re().get_den() != 1) integral = false;
      if (integral) return *integral_default;
    }
    if (complete) return 0UL;
    return std::nullopt;
  }
};

inline std::string render_ktype(const KType& q) {
  std::string s;
  for (std::size_t k = 0; k < q.size(); ++k) s += (k ? " " : "") + q[k].str();
  return s;
}

inline KTypeTable parse_ktype_table(std::string_view document, std::size_t rank) {
  KTypeTable t;
  std::istringstream in{std::string(document)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::string text = detail::trim(raw);
    if (text.empty()) continue;
    if (auto colon = text.find(':'); colon != std::string::npos) {
      std::string key = detail::trim(text.substr(0, colon));
      std::string value = detail::trim(text.substr(colon + 1));
      if (key == "complete") {
        if (value != "yes" && value != "no") throw ParseError("complete must be yes or no", line);
        t.complete = value == "yes";
      } else if (key == "integral_default") {
        t.integral_default = parse_rational(value).get_num().get_ui();
      } else {
        throw ParseError("unknown key '" + key + "'", line);
      }
      continue;
    }
    auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'weight = multiplicity'", line);
    KType q;
    try {
      for (const auto& c : detail::split_ws(text.substr(0, eq))) q.emplace_back(parse_rational(c));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line);
    }
    if (q.size() != rank)
      throw ParseError("weight has " + std::to_string(q.size()) + " coordinates, rank is " + std::to_string(rank), line);
    mpq_class m = parse_rational(detail::trim(text.substr(eq + 1)));
    if (m.get_den() != 1 || sgn(m) < 0) throw ParseError("multiplicity must be a non-negative integer", line);
    if (t.entries.count(q)) throw ParseError("weight listed twice", line);
    t.entries[q] = m.get_num().get_ui();
  }
  return t;
}

/// R: ordered products of distinct odd basis elements, as PBW monomials.
inline std::vector<Monomial> odd_part_basis(const Enveloping& env) {
  std::vector<std::size_t> odd_slots;
  for (std::size_t s = 0; s < env.dim(); ++s)
    if (env.slot_parity(s)) odd_slots.push_back(s);
  std::vector<Monomial> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << odd_slots.size()); ++mask) {
    Monomial m = env.unit();
    for (std::size_t k = 0; k < odd_slots.size(); ++k)
      if (mask & (std::size_t{1} << k)) m[odd_slots[k]] = 1;
    out.push_back(std::move(m));
  }
  return out;
}

struct KTypeBound {
  std::size_t dim_r = 0;
  std::vector<KType> r_weights;  // with repetition, one per basis element of R
  std::vector<KType> q_set;      // distinct
  unsigned long multiplicity_sum = 0;
  unsigned long bound = 0;
};

/// Bound for abelian k (k_C = h_C): k-types are characters, i.e. weights, and
/// q* < r (x) p* reads q = p - weight(r).
inline KTypeBound induce_ktype_bound(const EnvelopingPtr& env, const KTypeTable& table, const KType& p) {
  const SuperAlgebra& a = env->algebra();
  const auto& k = a.data().compact;
  for (auto i : k)
    for (auto j : k)
      if (!a.bracket(i, j).empty())
        throw DomainError("k_C is not abelian; use induce_ktype_bound_tabulated");
  if (p.size() != a.rank()) throw DimensionError("k-type has the wrong number of coordinates");
  KTypeBound out;
  auto basis = odd_part_basis(*env);
  out.dim_r = basis.size();
  std::set<KType> q;
  for (const auto& m : basis) {
    auto w = env->weight(m);
    out.r_weights.push_back(w);
    KType qq(p.size());
    for (std::size_t c = 0; c < p.size(); ++c) qq[c] = p[c] - w[c];
    q.insert(qq);
  }
  out.q_set.assign(q.begin(), q.end());
  for (const auto& qq : out.q_set) {
    auto m = table.multiplicity(qq);
    if (!m) throw DomainError("k-type table has no multiplicity for q = " + render_ktype(qq));
    out.multiplicity_sum += *m;
  }
  out.bound = out.dim_r * out.multiplicity_sum;
  return out;
}

/// Nonabelian k: k-types are labels, and the caller supplies the k-types of R
/// together with the tensor rule {(r, p) -> all q with q* < r (x) p*}.
struct TensorRule {
  std::vector<std::string> r_types;
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> contained;
};

inline KTypeBound induce_ktype_bound_tabulated(std::size_t dim_r, const std::map<std::string, unsigned long>& mult,
                                               const TensorRule& rule, const std::string& p) {
  KTypeBound out;
  out.dim_r = dim_r;
  std::set<std::string> q;
  for (const auto& r : rule.r_types) {
    auto it = rule.contained.find({r, p});
    if (it == rule.contained.end())
      throw DomainError("tensor rule has no entry for r = " + r + ", p = " + p);
    q.insert(it->second.begin(), it->second.end());
  }
  for (const auto& qq : q) {
    auto it = mult.find(qq);
    if (it == mult.end()) throw DomainError("k-type table has no multiplicity for q = " + qq);
    out.multiplicity_sum += it->second;
  }
  out.bound = out.dim_r * out.multiplicity_sum;
  return out;
}

}  // namespace suprep
