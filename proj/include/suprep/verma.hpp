#pragma once

// Verma modules U(g_C) (x)_{b} C_lambda, realized on the PBW basis of U(n^-)
// applied to the highest weight vector v_lambda, and the super Shapovalov form.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "suprep/algebra.hpp"
#include "suprep/enveloping.hpp"
#include "suprep/error.hpp"
#include "suprep/hermitian.hpp"
#include "suprep/scalar.hpp"

namespace suprep {

/// Vector of a Verma module: coefficients on U(n^-) monomials applied to
/// v_lambda. Coefficients are polynomials in the highest-weight coordinates
/// (constants when lambda is numeric).
using VermaVector = std::map<Monomial, PolyScalar, MonomialOrder>;

namespace detail {

inline void add_to(VermaVector& acc, const Monomial& m, const PolyScalar& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(m, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) acc.erase(it);
  }
}

}  // namespace detail

class VermaModule {
 public:
  /// Highest weight left symbolic: coordinate k is the k-th polynomial variable.
  static VermaModule symbolic(EnvelopingPtr env, unsigned depth) {
    const std::size_t r = env->algebra().rank();
    std::vector<PolyScalar> hw;
    for (std::size_t k = 0; k < r; ++k) hw.push_back(PolyScalar::variable(r, k));
    return VermaModule(std::move(env), std::move(hw), depth, true);
  }

  static VermaModule numeric(EnvelopingPtr env, const Weight& lambda, unsigned depth) {
    const std::size_t r = env->algebra().rank();
    if (lambda.coords.size() != r)
      throw DimensionError("highest weight has " + std::to_string(lambda.coords.size()) +
                           " coordinates, rank is " + std::to_string(r));
    std::vector<PolyScalar> hw;
    for (const auto& c : lambda.coords) hw.emplace_back(r, c);
    return VermaModule(std::move(env), std::move(hw), depth, false);
  }

  const EnvelopingPtr& env() const { return env_; }
  const SuperAlgebra& algebra() const { return env_->algebra(); }
  unsigned depth() const { return depth_; }
  bool is_symbolic() const { return symbolic_; }
  const std::vector<PolyScalar>& highest_weight() const { return hw_; }
  std::size_t arity() const { return hw_.size(); }

  /// Numeric highest weight; only for non-symbolic modules.
  Weight weight() const {
    if (symbolic_) throw DomainError("module has a symbolic highest weight");
    Weight w;
    for (const auto& p : hw_) w.coords.push_back(p.constant());
    return w;
  }

  /// PBW monomials of U(n^-) whose total root height is d.
  const std::vector<Monomial>& level(unsigned d) const {
    if (d > depth_) throw DepthError("level " + std::to_string(d) + " beyond constructed depth " + std::to_string(depth_));
    return levels_[d];
  }

  unsigned depth_of(const Monomial& m) const {
    unsigned d = 0;
    for (std::size_t s = 0; s < m.size(); ++s) d += m[s] * algebra().height(env_->basis_at(s));
    return d;
  }
  int parity_of(const Monomial& m) const { return env_->parity(m); }

  VermaVector basis_vector(unsigned d, std::size_t i) const {
    VermaVector v;
    v.emplace(level(d).at(i), PolyScalar(arity(), Scalar(1)));
    return v;
  }
  VermaVector highest_weight_vector() const { return basis_vector(0, 0); }

  /// Eigenvalues of the Cartan elements on the basis vector for m:
  /// lambda - weight(m), as polynomials.
  std::vector<PolyScalar> weight_of(const Monomial& m) const {
    auto w = env_->weight(m);
    std::vector<PolyScalar> out = hw_;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += PolyScalar(arity(), w[k]);
    return out;
  }

  /// Action of basis element g on a vector, via normal ordering of g * m.
  VermaVector act(std::size_t g, const VermaVector& v) const {
    VermaVector out;
    const std::size_t slot = env_->slot_of(g);
    for (const auto& [m, p] : v) {
      for (const auto& [mm, c] : env_->lmul_gen(slot, m)) {
        if (env_->has_root_factor(mm, true)) continue;
        Monomial neg = mm;
        PolyScalar coef(arity(), c);
        for (std::size_t s = 0; s < neg.size(); ++s) {
          std::size_t b = env_->basis_at(s);
          if (neg[s] == 0 || !algebra().is_cartan(b)) continue;
          coef *= hw_[algebra().cartan_slot(b)].pow(neg[s]);
          neg[s] = 0;
        }
        if (depth_of(neg) > depth_)
          throw DepthError("action leaves constructed depth " + std::to_string(depth_));
        detail::add_to(out, neg, coef * p);
      }
    }
    return out;
  }

  VermaVector act(const LinComb& g, const VermaVector& v) const {
    VermaVector out;
    for (const auto& [k, c] : g)
      for (const auto& [m, p] : act(k, v)) detail::add_to(out, m, p * c);
    return out;
  }

  /// u . v for an arbitrary element u, applying PBW factors right to left.
  VermaVector apply(const EnvElement& u, const VermaVector& v) const {
    VermaVector out;
    for (const auto& [m, c] : u.terms()) {
      auto f = env_->factors(m);
      VermaVector cur = v;
      for (auto it = f.rbegin(); it != f.rend(); ++it) cur = act(*it, cur);
      for (const auto& [mm, p] : cur) detail::add_to(out, mm, p * c);
    }
    return out;
  }

  /// u . v_lambda.
  VermaVector from_element(const EnvElement& u) const { return apply(u, highest_weight_vector()); }

  /// <b_m, b_n> for basis monomials of U(n^-):
  ///   (-i)^{|m||n|} beta_lambda(n^star m), zero when parities differ.
  PolyScalar basis_form(const Monomial& m, const Monomial& n) const {
    auto key = std::make_pair(m, n);
    if (auto it = form_cache_.find(key); it != form_cache_.end()) return it->second;
    PolyScalar value(arity());
    int pm = parity_of(m), pn = parity_of(n);
    if (pm == pn && env_->weight(m) == env_->weight(n)) {
      Terms prod = env_->mul_terms(env_->star_monomial(n), Terms{{m, Scalar(1)}});
      PolyScalar beta = hc_project(EnvElement(env_, std::move(prod)));
      value = beta.compose(hw_) * Scalar::pow_minus_i(pm * pn);
    }
    form_cache_.emplace(key, value);
    return value;
  }

  /// Ordinary Hermitian form <w, z>: linear in w, conjugate-linear in z.
  /// The highest-weight coordinates are treated as real.
  PolyScalar shapovalov(const VermaVector& w, const VermaVector& z) const {
    PolyScalar acc(arity());
    for (const auto& [m, pw] : w)
      for (const auto& [n, pz] : z) acc += pw * pz.conj() * basis_form(m, n);
    return acc;
  }

  std::string render(const VermaVector& v) const {
    if (v.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, p] : v) {
      std::string mono = env_->render_monomial(m);
      std::string vec = (mono.empty() ? "" : mono + "*") + "v";
      if (p.is_constant()) {
        PolyScalar::append_signed_term(out, p.constant(), vec, first);
      } else {
        out += first ? "" : " + ";
        out += "(" + p.str(algebra().weight_names()) + ")*" + vec;
      }
      first = false;
    }
    return out;
  }

 private:
  VermaModule(EnvelopingPtr env, std::vector<PolyScalar> hw, unsigned depth, bool symbolic)
      : env_(std::move(env)), hw_(std::move(hw)), depth_(depth), symbolic_(symbolic) {
    levels_.assign(depth_ + 1, {});
    std::vector<std::size_t> neg_slots;
    for (std::size_t s = 0; s < env_->dim(); ++s)
      if (algebra().is_negative(env_->basis_at(s))) neg_slots.push_back(s);
    Monomial m = env_->unit();
    enumerate(neg_slots, 0, 0, m);
  }

  void enumerate(const std::vector<std::size_t>& slots, std::size_t idx, unsigned d, Monomial& m) {
    if (idx == slots.size()) {
      levels_[d].push_back(m);
      return;
    }
    const std::size_t s = slots[idx];
    const unsigned h = algebra().height(env_->basis_at(s));
    const unsigned cap = env_->slot_parity(s) ? 1 : depth_;
    for (unsigned e = 0; e <= cap && d + e * h <= depth_; ++e) {
      m[s] = e;
      enumerate(slots, idx + 1, d + e * h, m);
    }
    m[s] = 0;
  }

  EnvelopingPtr env_;
  std::vector<PolyScalar> hw_;
  unsigned depth_;
  bool symbolic_;
  std::vector<std::vector<Monomial>> levels_;
  mutable std::map<std::pair<Monomial, Monomial>, PolyScalar> form_cache_;
};

inline VermaModule verma(EnvelopingPtr env, const Weight& lambda, unsigned depth) {
  return VermaModule::numeric(std::move(env), lambda, depth);
}

/// Gram matrix of one depth level with its definiteness verdict.
struct GramLevel {
  unsigned depth = 0;
  std::vector<Monomial> basis;
  std::vector<std::vector<PolyScalar>> matrix;
  /// Only for numeric highest weights.
  std::optional<DefinitenessResult> verdict;

  bool is_numeric() const {
    for (const auto& row : matrix)
      for (const auto& e : row)
        if (!e.is_constant()) return false;
    return true;
  }
  ScalarMatrix numeric() const {
    ScalarMatrix m;
    for (const auto& row : matrix) {
      ScalarVector r;
      for (const auto& e : row) r.push_back(e.constant());
      m.push_back(std::move(r));
    }
    return m;
  }
};

inline GramLevel gram(const VermaModule& v, unsigned d) {
  GramLevel g;
  g.depth = d;
  g.basis = v.level(d);
  const std::size_t n = g.basis.size();
  g.matrix.assign(n, std::vector<PolyScalar>(n, PolyScalar(v.arity())));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.matrix[i][j] = v.basis_form(g.basis[i], g.basis[j]);
  if (!v.is_symbolic()) g.verdict = classify_hermitian(g.numeric());
  return g;
}

/// Vector of level d from coordinates on its basis.
inline VermaVector level_vector(const VermaModule& v, unsigned d, const ScalarVector& coords) {
  VermaVector out;
  const auto& basis = v.level(d);
  for (std::size_t i = 0; i < basis.size(); ++i)
    detail::add_to(out, basis[i], PolyScalar(v.arity(), coords[i]));
  return out;
}

struct SingularVector {
  unsigned level = 0;
  ScalarVector coords;
  VermaVector vector;
  /// Annihilated by every positive root vector (a highest weight vector of a
  /// submodule), as opposed to merely lying in the radical.
  bool primitive = false;
};

/// Kernel bases of the Gram levels 1..depth (the radical, i.e. the maximal
/// submodule, level by level).
inline std::vector<SingularVector> singular_vectors(const VermaModule& v, unsigned depth) {
  if (v.is_symbolic()) throw DomainError("singular vectors need a numeric highest weight");
  if (depth > v.depth()) throw DepthError("requested depth exceeds constructed depth");
  std::vector<SingularVector> out;
  for (unsigned d = 1; d <= depth; ++d) {
    GramLevel g = gram(v, d);
    for (auto& c : g.verdict->kernel) {
      SingularVector s;
      s.level = d;
      s.vector = level_vector(v, d, c);
      s.coords = std::move(c);
      s.primitive = true;
      for (std::size_t k = 0; k < v.algebra().dim(); ++k)
        if (v.algebra().is_positive(k) && !v.act(k, s.vector).empty()) s.primitive = false;
      out.push_back(std::move(s));
    }
  }
  return out;
}

/// Even-subalgebra summands of an osp(1|2) super Verma module.
struct EvenDecomposition {
  std::vector<Monomial> top;     // generated by v_t
  std::vector<Monomial> bottom;  // generated by y v_t
  std::vector<PolyScalar> top_spectrum;
  std::vector<PolyScalar> bottom_spectrum;
};

inline EvenDecomposition decompose_even(const VermaModule& v) {
  const SuperAlgebra& a = v.algebra();
  if (!a.is_osp12_like())
    throw DomainError("decompose_even needs an osp(1|2)-type algebra, got " + a.name());
  EvenDecomposition out;
  for (unsigned d = 0; d <= v.depth(); ++d)
    for (const auto& m : v.level(d)) {
      auto w = v.weight_of(m);
      if (v.parity_of(m) == 0) {
        out.top.push_back(m);
        out.top_spectrum.push_back(w[0]);
      } else {
        out.bottom.push_back(m);
        out.bottom_spectrum.push_back(w[0]);
      }
    }
  return out;
}

}  // namespace suprep
