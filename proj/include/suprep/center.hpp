#pragma once

// Central elements of U(g_C) of bounded filtration degree, by an exact linear
// solve over the PBW basis of U[0].

#include <cstddef>
#include <vector>

#include "suprep/enveloping.hpp"
#include "suprep/hermitian.hpp"

namespace suprep {

namespace detail {

inline void enumerate_u0(const Enveloping& env, unsigned max_degree, std::size_t slot, unsigned degree,
                         Monomial& m, std::vector<Monomial>& out) {
  if (slot == env.dim()) {
    bool zero = true;
    for (const auto& w : env.weight(m))
      if (!w.is_zero()) zero = false;
    if (zero && env.parity(m) == 0) out.push_back(m);
    return;
  }
  const unsigned cap = env.slot_parity(slot) ? 1 : max_degree;
  for (unsigned e = 0; e <= cap && degree + e <= max_degree; ++e) {
    m[slot] = e;
    enumerate_u0(env, max_degree, slot + 1, degree + e, m, out);
  }
  m[slot] = 0;
}

}  // namespace detail

/// Even PBW monomials of weight zero and degree at most max_degree, lowest
/// degree first.
inline std::vector<Monomial> u0_monomials(const Enveloping& env, unsigned max_degree) {
  std::vector<Monomial> out;
  Monomial m = env.unit();
  detail::enumerate_u0(env, max_degree, 0, 0, m, out);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return MonomialOrder{}(b, a); });
  return out;
}

/// Basis of {z in U[0], even, degree <= max_degree : [g, z] = 0 for all g}.
inline std::vector<EnvElement> center_candidates(const EnvelopingPtr& env, unsigned max_degree) {
  const auto cands = u0_monomials(*env, max_degree);
  const std::size_t n = cands.size();
  std::map<std::pair<std::size_t, Monomial>, std::size_t> row_of;
  ScalarMatrix rows;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t g = 0; g < env->dim(); ++g) {
      const std::size_t slot = env->slot_of(g);
      Terms comm = env->lmul_gen(slot, cands[j]);
      detail::add_terms(comm, env->rmul_gen(cands[j], slot), Scalar(-1));
      for (const auto& [m, c] : comm) {
        auto [it, inserted] = row_of.try_emplace({g, m}, rows.size());
        if (inserted) rows.emplace_back(n);
        rows[it->second][j] += c;
      }
    }
  }
  std::vector<EnvElement> out;
  for (const auto& v : nullspace(rows, n)) {
    Terms t;
    for (std::size_t j = 0; j < n; ++j) detail::add_term(t, cands[j], v[j]);
    out.emplace_back(env, std::move(t));
  }
  return out;
}

/// Supercommutator [a, b] = ab - (-1)^{|a||b|} ba for homogeneous a, b.
inline EnvElement supercommutator(const EnvElement& a, const EnvElement& b) {
  auto pa = a.parity(), pb = b.parity();
  if (!pa || !pb) throw DomainError("supercommutator needs homogeneous arguments");
  return a * b - Scalar::sign(*pa * *pb) * (b * a);
}

}  // namespace suprep
