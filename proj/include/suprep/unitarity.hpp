#pragma once

// Finite-depth unitarity certificates for highest weight modules, the root
// sign conditions on lambda, and the closed-form rank-one verdicts.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "suprep/algebra.hpp"
#include "suprep/enveloping.hpp"
#include "suprep/hermitian.hpp"
#include "suprep/verma.hpp"

namespace suprep {

enum class UnitarityStatus {
  /// Every Gram level up to the depth is positive definite.
  UnitaryToDepth,
  /// No negative direction, but some level has a radical: the module is
  /// reducible and its irreducible quotient is unitary to the depth.
  QuotientUnitaryToDepth,
  /// Some level carries a vector of non-positive norm outside the radical.
  NotUnitary,
};

inline std::string to_string(UnitarityStatus s) {
  switch (s) {
    case UnitarityStatus::UnitaryToDepth: return "UnitaryToDepth";
    case UnitarityStatus::QuotientUnitaryToDepth: return "QuotientUnitaryToDepth";
    case UnitarityStatus::NotUnitary: return "NotUnitary";
  }
  return "?";
}

struct UnitarityCertificate {
  UnitarityStatus status = UnitarityStatus::UnitaryToDepth;
  unsigned depth = 0;
  Weight lambda;
  /// First indefinite level and its witness a v_lambda with <a v, a v> < 0.
  std::optional<unsigned> failing_level;
  ScalarVector witness;
  Scalar witness_value;
  VermaVector witness_vector;
  /// First level with a nonzero radical, and the radical vectors found.
  std::optional<unsigned> first_kernel_level;
  std::vector<SingularVector> radical;
  /// Verdict of every level checked, in order.
  std::vector<Definiteness> levels;

  std::string label() const {
    return to_string(status) + (status == UnitarityStatus::NotUnitary ? "" : "(" + std::to_string(depth) + ")");
  }
};

/// Checks Gram positivity level by level up to `depth`. Stops at the first
/// indefinite level unless `all_levels` is set, in which case the radical is
/// collected through every level.
inline UnitarityCertificate unitarity_certificate(const EnvelopingPtr& env, const Weight& lambda,
                                                  unsigned depth, bool all_levels = false) {
  if (!lambda.is_real()) throw DomainError("unitarity requires a real highest weight");
  VermaModule v = VermaModule::numeric(env, lambda, depth);
  UnitarityCertificate cert;
  cert.depth = depth;
  cert.lambda = lambda;
  for (unsigned d = 0; d <= depth; ++d) {
    GramLevel g = gram(v, d);
    const DefinitenessResult& r = *g.verdict;
    cert.levels.push_back(r.verdict);
    for (const auto& k : r.kernel) {
      if (!cert.first_kernel_level) cert.first_kernel_level = d;
      SingularVector s;
      s.level = d;
      s.coords = k;
      s.vector = level_vector(v, d, k);
      cert.radical.push_back(std::move(s));
    }
    if (r.verdict == Definiteness::Indefinite && !cert.failing_level) {
      cert.status = UnitarityStatus::NotUnitary;
      cert.failing_level = d;
      cert.witness = *r.negative_witness;
      cert.witness_value = r.witness_value;
      cert.witness_vector = level_vector(v, d, cert.witness);
      if (!all_levels) return cert;
    }
  }
  if (cert.failing_level) return cert;
  cert.status = cert.radical.empty() ? UnitarityStatus::UnitaryToDepth : UnitarityStatus::QuotientUnitaryToDepth;
  return cert;
}

struct RootCondition {
  std::size_t root_vector = 0;
  bool compact = false;
  LinComb coroot;
  Scalar value;  // lambda(H_alpha)
  bool satisfied = false;
};

struct NecessaryConditionsReport {
  std::vector<RootCondition> conditions;
  bool passed() const {
    for (const auto& c : conditions)
      if (!c.satisfied) return false;
    return true;
  }
};

/// lambda(H_alpha) >= 0 for compact and <= 0 for noncompact positive even
/// roots alpha.
inline NecessaryConditionsReport necessary_conditions(const SuperAlgebra& a, const Weight& lambda) {
  if (!lambda.is_real()) throw DomainError("root conditions require a real highest weight");
  NecessaryConditionsReport rep;
  for (const auto& r : a.roots()) {
    if (!r.positive || a.parity(r.vector) != 0) continue;
    RootCondition c;
    c.root_vector = r.vector;
    c.compact = r.compact;
    c.coroot = coroot(a, r.vector);
    c.value = weight_on(a, lambda, c.coroot);
    int s = sgn(c.value.re());
    c.satisfied = r.compact ? s >= 0 : s <= 0;
    rep.conditions.push_back(std::move(c));
  }
  return rep;
}

/// Linear factor a*t + b with rational coefficients.
struct LinearFactor {
  mpq_class slope;
  mpq_class offset;
  mpq_class at(const mpq_class& t) const { return slope * t + offset; }
};

/// Closed-form ratio N(r)/N(r-1) of consecutive Gram levels for the built-in
/// rank-one algebras (t = lambda(H)):
///   osp12: -c_r with c_{2m} = -m, c_{2m+1} = t - m
///   sl2:   -r (t - r + 1)
inline LinearFactor closed_form_factor(const SuperAlgebra& a, unsigned r) {
  if (r == 0) throw DomainError("Gram ratio starts at level 1");
  if (a.data() == osp12_data()) {
    mpq_class m = r / 2;
    if (r % 2 == 0) return {0, m};
    return {-1, m};
  }
  if (a.data() == sl2_data()) return {-mpq_class(r), mpq_class(r) * (r - 1)};
  throw DomainError("no closed form for algebra " + a.name());
}

inline bool has_closed_form(const SuperAlgebra& a) {
  return a.data() == osp12_data() || a.data() == sl2_data();
}

struct ClosedFormVerdict {
  /// All factors positive at every level.
  bool unitary = false;
  /// t in N: some factor vanishes and the Verma module is reducible.
  bool reducible = false;
  /// First level whose factor is negative (non-unitary) or zero (reducible).
  std::optional<unsigned> first_bad_level;
};

/// Sign analysis of the infinite factor family at real t. Every factor is
/// linear in t with slope in {0, -1} (osp12) or {-r} (sl2); the constant
/// factors are positive, and the t-dependent ones are positive for all r
/// exactly when t < 0. For t >= 0 the first non-positive factor occurs at a
/// level bounded by 2t + 2, so a finite search finds it.
inline ClosedFormVerdict closed_form_verdict(const SuperAlgebra& a, const mpq_class& t) {
  ClosedFormVerdict v;
  if (sgn(t) < 0) {
    v.unitary = true;
    return v;
  }
  mpz_class bound = 2 * (t.get_num() / t.get_den()) + 3;
  for (unsigned r = 1; r <= bound.get_ui(); ++r) {
    mpq_class f = closed_form_factor(a, r).at(t);
    if (sgn(f) <= 0) {
      v.first_bad_level = r;
      v.reducible = sgn(f) == 0;
      return v;
    }
  }
  return v;
}

}  // namespace suprep
