#pragma once

// The universal enveloping superalgebra U(g_C) in a PBW basis.
//
// Monomials are exponent vectors indexed by PBW slot (negative root vectors,
// then Cartan, then positive root vectors). Odd slots carry exponent 0 or 1.
// Products are normalized by swapping the disordered adjacent pair using
//   h g = (-1)^{|h||g|} g h + [h, g]     and     z z = [z, z] / 2  (z odd),
// which strictly lowers (degree, disorder) and so terminates.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "suprep/algebra.hpp"
#include "suprep/error.hpp"
#include "suprep/expression.hpp"
#include "suprep/scalar.hpp"

namespace suprep {

using Monomial = Exponents;

/// Higher degree first, then lexicographically larger exponent vectors.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return GradedLexDescending{}(a, b); }
};

using Terms = std::map<Monomial, Scalar, MonomialOrder>;

namespace detail {

inline void add_terms(Terms& acc, const Terms& v, const Scalar& factor = Scalar(1)) {
  if (factor.is_zero()) return;
  for (const auto& [m, c] : v) {
    auto [it, inserted] = acc.try_emplace(m, c * factor);
    if (!inserted) {
      it->second += c * factor;
      if (it->second.is_zero()) acc.erase(it);
    } else if (it->second.is_zero()) {
      acc.erase(it);
    }
  }
}

inline void add_term(Terms& acc, const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

}  // namespace detail

/// Rewriting engine for one algebra. Memoizes generator products; the memo
/// is guarded so an engine may be shared between threads.
class Enveloping {
 public:
  static std::shared_ptr<const Enveloping> create(AlgebraPtr algebra) {
    return std::shared_ptr<const Enveloping>(new Enveloping(std::move(algebra)));
  }

  const SuperAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  std::size_t dim() const { return algebra_->dim(); }

  /// Basis element sitting at a PBW slot, and vice versa.
  std::size_t basis_at(std::size_t slot) const { return algebra_->pbw_order()[slot]; }
  std::size_t slot_of(std::size_t basis) const { return algebra_->pbw_slot(basis); }
  int slot_parity(std::size_t slot) const { return algebra_->parity(basis_at(slot)); }

  Monomial unit() const { return Monomial(dim(), 0); }

  Monomial generator(std::size_t basis) const {
    Monomial m = unit();
    m[slot_of(basis)] = 1;
    return m;
  }

  int parity(const Monomial& m) const {
    int p = 0;
    for (std::size_t s = 0; s < m.size(); ++s) p += static_cast<int>(m[s]) * slot_parity(s);
    return p % 2;
  }

  /// m * b where b is the basis element at PBW slot `slot`.
  Terms rmul_gen(const Monomial& m, std::size_t slot) const {
    auto key = std::make_pair(m, slot);
    if (auto hit = lookup(rmemo_, key)) return *hit;

    Terms out;
    std::ptrdiff_t last = -1;
    for (std::size_t s = m.size(); s-- > 0;)
      if (m[s] != 0) {
        last = static_cast<std::ptrdiff_t>(s);
        break;
      }
    const auto q = static_cast<std::size_t>(last);
    if (last < 0 || q < slot || (q == slot && slot_parity(slot) == 0)) {
      Monomial r = m;
      ++r[slot];
      out.emplace(std::move(r), Scalar(1));
    } else if (q == slot) {
      // Odd square: z z = [z, z] / 2.
      Monomial rest = m;
      --rest[slot];
      std::size_t g = basis_at(slot);
      for (const auto& [k, c] : algebra_->bracket(g, g))
        detail::add_terms(out, rmul_gen(rest, slot_of(k)), c / Scalar(2));
    } else {
      // m = rest * h with h after g: rest h g = sign rest g h + rest [h, g].
      Monomial rest = m;
      --rest[q];
      std::size_t h = basis_at(q), g = basis_at(slot);
      Scalar sign = Scalar::sign(algebra_->parity(h) * algebra_->parity(g));
      Terms moved = rmul_gen(rest, slot);
      for (const auto& [mm, c] : moved) detail::add_terms(out, rmul_gen(mm, q), c * sign);
      for (const auto& [k, c] : algebra_->bracket(h, g)) detail::add_terms(out, rmul_gen(rest, slot_of(k)), c);
    }
    store(rmemo_, key, out);
    return out;
  }

  /// b * m where b is the basis element at PBW slot `slot`.
  Terms lmul_gen(std::size_t slot, const Monomial& m) const {
    auto key = std::make_pair(m, slot);
    if (auto hit = lookup(lmemo_, key)) return *hit;

    Terms out;
    std::ptrdiff_t first = -1;
    for (std::size_t s = 0; s < m.size(); ++s)
      if (m[s] != 0) {
        first = static_cast<std::ptrdiff_t>(s);
        break;
      }
    const auto q = static_cast<std::size_t>(first);
    if (first < 0 || slot < q || (q == slot && slot_parity(slot) == 0)) {
      Monomial r = m;
      ++r[slot];
      out.emplace(std::move(r), Scalar(1));
    } else if (q == slot) {
      Monomial rest = m;
      --rest[slot];
      std::size_t g = basis_at(slot);
      for (const auto& [k, c] : algebra_->bracket(g, g))
        detail::add_terms(out, lmul_gen(slot_of(k), rest), c / Scalar(2));
    } else {
      // m = h * rest with h before g: g h rest = sign h g rest + [g, h] rest.
      Monomial rest = m;
      --rest[q];
      std::size_t h = basis_at(q), g = basis_at(slot);
      Scalar sign = Scalar::sign(algebra_->parity(h) * algebra_->parity(g));
      Terms moved = lmul_gen(slot, rest);
      for (const auto& [mm, c] : moved) detail::add_terms(out, lmul_gen(q, mm), c * sign);
      for (const auto& [k, c] : algebra_->bracket(g, h)) detail::add_terms(out, lmul_gen(slot_of(k), rest), c);
    }
    store(lmemo_, key, out);
    return out;
  }

  /// Product of two PBW monomials in normal form.
  Terms mul_monomials(const Monomial& a, const Monomial& b) const {
    Terms cur;
    cur.emplace(a, Scalar(1));
    for (std::size_t s = 0; s < b.size(); ++s) {
      for (unsigned e = 0; e < b[s]; ++e) {
        Terms next;
        for (const auto& [m, c] : cur) detail::add_terms(next, rmul_gen(m, s), c);
        cur = std::move(next);
      }
    }
    return cur;
  }

  Terms mul_terms(const Terms& a, const Terms& b) const {
    Terms out;
    for (const auto& [mb, cb] : b)
      for (const auto& [ma, ca] : a) detail::add_terms(out, mul_monomials(ma, mb), ca * cb);
    return out;
  }

  /// Left multiplication of an arbitrary element by a linear combination.
  Terms lmul_lin(const LinComb& g, const Terms& v) const {
    Terms out;
    for (const auto& [k, c] : g)
      for (const auto& [m, cm] : v) detail::add_terms(out, lmul_gen(slot_of(k), m), c * cm);
    return out;
  }

  /// Generator factors of a monomial, left to right, as basis indices.
  std::vector<std::size_t> factors(const Monomial& m) const {
    std::vector<std::size_t> f;
    for (std::size_t s = 0; s < m.size(); ++s)
      for (unsigned e = 0; e < m[s]; ++e) f.push_back(basis_at(s));
    return f;
  }

  /// star of a PBW monomial: reverse the factors, apply star to each, and
  /// pick up (-1)^{o(o-1)/2} for o odd factors.
  Terms star_monomial(const Monomial& m) const {
    if (auto hit = lookup(star_memo_, m)) return *hit;
    auto f = factors(m);
    int odd = 0;
    for (auto g : f) odd += algebra_->parity(g);
    Terms cur;
    cur.emplace(unit(), Scalar::sign(odd * (odd - 1) / 2));
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
      Terms next;
      for (const auto& [k, c] : algebra_->star_of(*it))
        for (const auto& [mm, cm] : cur) detail::add_terms(next, rmul_gen(mm, slot_of(k)), c * cm);
      cur = std::move(next);
    }
    store(star_memo_, m, cur);
    return cur;
  }

  /// ad(h) weight of a monomial.
  std::vector<Scalar> weight(const Monomial& m) const {
    std::vector<Scalar> w(algebra_->rank());
    for (std::size_t s = 0; s < m.size(); ++s) {
      if (m[s] == 0) continue;
      auto ws = algebra_->weight_of(basis_at(s));
      for (std::size_t k = 0; k < w.size(); ++k) w[k] += ws[k] * Scalar(static_cast<long>(m[s]));
    }
    return w;
  }

  bool has_root_factor(const Monomial& m, bool positive) const {
    for (std::size_t s = 0; s < m.size(); ++s)
      if (m[s] != 0 && (positive ? algebra_->is_positive(basis_at(s)) : algebra_->is_negative(basis_at(s))))
        return true;
    return false;
  }

  /// Cartan exponents of a monomial as an exponent vector over the Cartan
  /// coordinates.
  Exponents cartan_exponents(const Monomial& m) const {
    Exponents e(algebra_->rank(), 0);
    for (std::size_t s = 0; s < m.size(); ++s)
      if (m[s] != 0 && algebra_->is_cartan(basis_at(s))) e[algebra_->cartan_slot(basis_at(s))] = m[s];
    return e;
  }

  std::string render_monomial(const Monomial& m) const {
    std::string out;
    for (std::size_t s = 0; s < m.size(); ++s) {
      if (m[s] == 0) continue;
      if (!out.empty()) out += "*";
      out += algebra_->basis_name(basis_at(s));
      if (m[s] > 1) out += "^" + std::to_string(m[s]);
    }
    return out;
  }

 private:
  explicit Enveloping(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

  template <typename Map, typename Key>
  std::optional<Terms> lookup(Map& memo, const Key& key) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo.find(key);
    if (it == memo.end()) return std::nullopt;
    return it->second;
  }
  template <typename Map, typename Key>
  void store(Map& memo, const Key& key, const Terms& value) const {
    std::lock_guard<std::mutex> lock(mutex_);
    memo.emplace(key, value);
  }

  AlgebraPtr algebra_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Monomial, std::size_t>, Terms> rmemo_;
  mutable std::map<std::pair<Monomial, std::size_t>, Terms> lmemo_;
  mutable std::map<Monomial, Terms> star_memo_;
};

using EnvelopingPtr = std::shared_ptr<const Enveloping>;

/// Element of U(g_C) in PBW normal form. Immutable in spirit: every
/// operation returns a new normalized element.
class EnvElement {
 public:
  EnvElement() = default;
  explicit EnvElement(EnvelopingPtr env) : env_(std::move(env)) {}
  EnvElement(EnvelopingPtr env, Terms terms) : env_(std::move(env)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }

  static EnvElement scalar(EnvelopingPtr env, const Scalar& c) {
    Terms t;
    detail::add_term(t, env->unit(), c);
    return EnvElement(std::move(env), std::move(t));
  }
  static EnvElement basis(EnvelopingPtr env, std::size_t k) {
    Terms t;
    t.emplace(env->generator(k), Scalar(1));
    return EnvElement(std::move(env), std::move(t));
  }
  static EnvElement from_lincomb(EnvelopingPtr env, const LinComb& v) {
    Terms t;
    for (const auto& [k, c] : v) detail::add_term(t, env->generator(k), c);
    return EnvElement(std::move(env), std::move(t));
  }

  const EnvelopingPtr& env() const { return env_; }
  const SuperAlgebra& algebra() const { return env_->algebra(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Parity if homogeneous; nullopt for mixed elements. Zero counts as even.
  std::optional<int> parity() const {
    std::optional<int> p;
    for (const auto& [m, c] : terms_) {
      int q = env_->parity(m);
      if (p && *p != q) return std::nullopt;
      p = q;
    }
    return p.value_or(0);
  }

  EnvElement operator-() const { return *this * Scalar(-1); }
  friend EnvElement operator+(const EnvElement& a, const EnvElement& b) {
    check_same(a, b);
    Terms t = a.terms_;
    detail::add_terms(t, b.terms_);
    return EnvElement(a.env_ ? a.env_ : b.env_, std::move(t));
  }
  friend EnvElement operator-(const EnvElement& a, const EnvElement& b) { return a + (-b); }
  friend EnvElement operator*(const EnvElement& a, const Scalar& s) {
    Terms t;
    detail::add_terms(t, a.terms_, s);
    return EnvElement(a.env_, std::move(t));
  }
  friend EnvElement operator*(const Scalar& s, const EnvElement& a) { return a * s; }
  friend EnvElement operator*(const EnvElement& a, const EnvElement& b) {
    check_same(a, b);
    const auto& env = a.env_ ? a.env_ : b.env_;
    if (!env) return EnvElement();
    return EnvElement(env, env->mul_terms(a.terms_, b.terms_));
  }
  friend bool operator==(const EnvElement& a, const EnvElement& b) {
    return a.terms_ == b.terms_;
  }

  EnvElement pow(unsigned n) const {
    EnvElement r = scalar(env_, Scalar(1));
    for (unsigned k = 0; k < n; ++k) r = r * *this;
    return r;
  }

  /// Coefficient of a monomial (zero when absent).
  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
  }

  /// Deterministic text in the expression grammar, e.g. `- y*x + H`.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      PolyScalar::append_signed_term(out, c, env_->render_monomial(m), first);
      first = false;
    }
    return out;
  }

 private:
  static void check_same(const EnvElement& a, const EnvElement& b) {
    if (a.env_ && b.env_ && a.env_ != b.env_ && &a.env_->algebra() != &b.env_->algebra())
      throw DomainError("elements belong to different algebras");
  }

  EnvelopingPtr env_;
  Terms terms_;
};

/// One factor of a word: basis element and power.
struct WordFactor {
  std::size_t basis;
  unsigned power = 1;
};

/// PBW expansion of a word g_1^{p_1} g_2^{p_2} ... .
inline EnvElement normal_form(const EnvelopingPtr& env, std::span<const WordFactor> word) {
  Terms cur;
  cur.emplace(env->unit(), Scalar(1));
  for (const auto& f : word) {
    if (f.basis >= env->dim()) throw DomainError("word refers to an unknown basis index");
    for (unsigned e = 0; e < f.power; ++e) {
      Terms next;
      for (const auto& [m, c] : cur) detail::add_terms(next, env->rmul_gen(m, env->slot_of(f.basis)), c);
      cur = std::move(next);
    }
  }
  return EnvElement(env, std::move(cur));
}

/// Same, with factors named by basis symbols.
inline EnvElement normal_form(const EnvelopingPtr& env,
                              std::initializer_list<std::pair<std::string, unsigned>> word) {
  std::vector<WordFactor> w;
  for (const auto& [name, p] : word) w.push_back({env->algebra().require_index(name), p});
  return normal_form(env, w);
}

inline EnvElement mul(const EnvElement& a, const EnvElement& b) { return a * b; }

/// Conjugate-linear super antiautomorphism determined by the real form.
inline EnvElement star(const EnvElement& a) {
  Terms out;
  for (const auto& [m, c] : a.terms()) detail::add_terms(out, a.env()->star_monomial(m), c.conj());
  return EnvElement(a.env(), std::move(out));
}

/// Weight components: map from ad(h)-weight to the part of u of that weight.
inline std::map<std::vector<Scalar>, EnvElement> weight_grade(const EnvElement& u) {
  std::map<std::vector<Scalar>, Terms> parts;
  for (const auto& [m, c] : u.terms()) detail::add_term(parts[u.env()->weight(m)], m, c);
  std::map<std::vector<Scalar>, EnvElement> out;
  for (auto& [w, t] : parts) out.emplace(w, EnvElement(u.env(), std::move(t)));
  return out;
}

/// Harish-Chandra projection beta: the Cartan polynomial of the U[0] part
/// modulo P = sum_{gamma>0} U g_gamma, extended by zero off U[0]. Variables
/// are the Cartan coordinates, i.e. beta(u) evaluated at lambda is
/// beta(u)(lambda).
inline PolyScalar hc_project(const EnvElement& u) {
  const auto& env = *u.env();
  PolyScalar p(env.algebra().rank());
  for (const auto& [m, c] : u.terms()) {
    if (env.has_root_factor(m, true) || env.has_root_factor(m, false)) continue;
    p.add_term(env.cartan_exponents(m), c);
  }
  return p;
}

/// beta(u) as an element of U(h_C) inside U(g_C).
inline EnvElement hc_project_element(const EnvElement& u) {
  const auto& env = *u.env();
  Terms t;
  for (const auto& [m, c] : u.terms())
    if (!env.has_root_factor(m, true) && !env.has_root_factor(m, false)) detail::add_term(t, m, c);
  return EnvElement(u.env(), std::move(t));
}

/// beta(u)(lambda): the scalar by which the U[0] part of u acts on a highest
/// weight vector of weight lambda.
inline Scalar act_on_hwv(const EnvElement& u, const Weight& lambda) {
  return hc_project(u).eval(lambda.coords);
}

/// Parses an expression over the algebra's basis. `star(...)` and
/// `beta(...)` are available as functions.
inline EnvElement parse_element(const EnvelopingPtr& env, std::string_view text) {
  struct Ops {
    const EnvelopingPtr& env;
    EnvElement number(const mpq_class& q, const Expr&) { return EnvElement::scalar(env, Scalar(q)); }
    EnvElement imag(const Expr&) { return EnvElement::scalar(env, Scalar::i()); }
    EnvElement symbol(const std::string& name, const Expr& e) {
      auto k = env->algebra().index_of(name);
      if (!k) throw ParseError("unknown symbol '" + name + "'", 0, e.column);
      return EnvElement::basis(env, *k);
    }
    EnvElement add(const EnvElement& a, const EnvElement& b, const Expr&) { return a + b; }
    EnvElement neg(const EnvElement& a, const Expr&) { return -a; }
    EnvElement mul(const EnvElement& a, const EnvElement& b, const Expr&) { return a * b; }
    EnvElement pow(const EnvElement& a, unsigned n, const Expr&) { return a.pow(n); }
    EnvElement call(const std::string& name, const EnvElement& a, const Expr& e) {
      if (name == "star") return star(a);
      if (name == "beta") return hc_project_element(a);
      throw ParseError("unknown function '" + name + "'", 0, e.column);
    }
  } ops{env};
  return evaluate<EnvElement>(parse_expression(text), ops);
}

}  // namespace suprep
