#pragma once

// Exact Gaussian rationals Q(i) and multivariate polynomials over them.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "suprep/error.hpp"

namespace suprep {

/// Gaussian rational re + im*i with arbitrary-precision parts.
///
/// Both parts are kept canonical (lowest terms, positive denominator), so
/// equality is structural and printing is deterministic.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(0, 1); }
  static Scalar rational(long num, long den = 1) {
    if (den == 0) throw DomainError("zero denominator in rational literal");
    return Scalar(mpq_class(num, den));
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }

  /// |s|^2, always a non-negative rational.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw DomainError("division by zero scalar");
    mpq_class d = o.norm2();
    Scalar num = *this * o.conj();
    re_ = num.re_ / d;
    im_ = num.im_ / d;
    return *this;
  }
  Scalar inverse() const { return Scalar(1) / *this; }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Lexicographic on (re, im); a total order for use as a map key, not a
  /// field ordering.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  /// Renders as `a/b`, `c/d*i` or `a/b+c/d*i`.
  std::string str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag;
    if (im_ == 1) {
      imag = "i";
    } else if (im_ == -1) {
      imag = "-i";
    } else {
      imag = im_.get_str() + "*i";
    }
    if (sgn(re_) == 0) return imag;
    if (sgn(im_) > 0) return re_.get_str() + "+" + imag;
    return re_.get_str() + imag;
  }

  /// (-i)^k, (i)^k and (-1)^k.
  static Scalar pow_i(int k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return Scalar(1);
      case 1: return Scalar(0, 1);
      case 2: return Scalar(-1);
      default: return Scalar(0, -1);
    }
  }
  static Scalar pow_minus_i(int k) { return pow_i(-k); }
  static Scalar sign(int k) { return (k % 2 == 0) ? Scalar(1) : Scalar(-1); }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

/// Parses `p`, `p/q`, `-p/q` (integers only; decimals are rejected).
inline mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return ParseError("not an exact rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  auto digits_ok = [](std::string_view d, bool allow_sign) {
    std::size_t k = 0;
    if (allow_sign && !d.empty() && (d[0] == '-' || d[0] == '+')) k = 1;
    if (k >= d.size()) return false;
    for (; k < d.size(); ++k)
      if (d[k] < '0' || d[k] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

using Exponents = std::vector<unsigned>;

/// Graded-lexicographic order, largest first: higher total degree first, then
/// lexicographically larger exponent vectors first.
struct GradedLexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da > db;
    return a > b;
  }
};

/// Multivariate polynomial over Scalar in a fixed number of variables.
class PolyScalar {
 public:
  using Terms = std::map<Exponents, Scalar, GradedLexDescending>;

  PolyScalar() = default;
  explicit PolyScalar(std::size_t arity) : arity_(arity) {}
  PolyScalar(std::size_t arity, const Scalar& c) : arity_(arity) {
    if (!c.is_zero()) terms_.emplace(Exponents(arity, 0), c);
  }

  /// The coordinate polynomial x_k.
  static PolyScalar variable(std::size_t arity, std::size_t k) {
    if (k >= arity) throw DimensionError("variable index out of range");
    PolyScalar p(arity);
    Exponents e(arity, 0);
    e[k] = 1;
    p.terms_.emplace(std::move(e), Scalar(1));
    return p;
  }

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }
  /// Constant term; exact round-trip for degree-0 polynomials.
  Scalar constant() const {
    auto it = terms_.find(Exponents(arity_, 0));
    return it == terms_.end() ? Scalar() : it->second;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  void add_term(const Exponents& e, const Scalar& c) {
    if (e.size() != arity_) throw DimensionError("exponent arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  PolyScalar conj() const {
    PolyScalar r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
    return r;
  }

  PolyScalar operator-() const {
    PolyScalar r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  PolyScalar& operator+=(const PolyScalar& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  PolyScalar& operator-=(const PolyScalar& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  PolyScalar& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend PolyScalar operator+(PolyScalar a, const PolyScalar& b) { return a += b; }
  friend PolyScalar operator-(PolyScalar a, const PolyScalar& b) { return a -= b; }
  friend PolyScalar operator*(PolyScalar a, const Scalar& s) { return a *= s; }
  friend PolyScalar operator*(const Scalar& s, PolyScalar a) { return a *= s; }
  friend PolyScalar operator*(const PolyScalar& a, const PolyScalar& b) {
    a.check_arity(b);
    PolyScalar r(a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea);
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  PolyScalar& operator*=(const PolyScalar& o) { return *this = *this * o; }

  PolyScalar pow(unsigned n) const {
    PolyScalar r(arity_, Scalar(1));
    for (unsigned k = 0; k < n; ++k) r *= *this;
    return r;
  }

  friend bool operator==(const PolyScalar& a, const PolyScalar& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  /// Exact evaluation at a point of Q(i)^arity.
  Scalar eval(std::span<const Scalar> point) const {
    if (point.size() != arity_)
      throw DimensionError("evaluation point has " + std::to_string(point.size()) +
                           " coordinates, polynomial has arity " +
                           std::to_string(arity_));
    Scalar acc;
    for (const auto& [e, c] : terms_) {
      Scalar term = c;
      for (std::size_t k = 0; k < arity_; ++k)
        for (unsigned p = 0; p < e[k]; ++p) term *= point[k];
      acc += term;
    }
    return acc;
  }

  /// Substitutes polynomials (all of a common arity) for the variables.
  PolyScalar compose(std::span<const PolyScalar> values) const {
    if (values.size() != arity_) throw DimensionError("composition arity mismatch");
    std::size_t out_arity = values.empty() ? 0 : values[0].arity();
    PolyScalar acc(out_arity);
    for (const auto& [e, c] : terms_) {
      PolyScalar term(out_arity, c);
      for (std::size_t k = 0; k < arity_; ++k) term *= values[k].pow(e[k]);
      acc += term;
    }
    return acc;
  }

  /// Deterministic rendering in graded-lex order using the given variable
  /// names, e.g. `t^2 - 2*t + 1/2`.
  std::string str(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string mono;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += k < names.size() ? names[k] : "x" + std::to_string(k + 1);
        if (e[k] > 1) mono += "^" + std::to_string(e[k]);
      }
      append_signed_term(out, c, mono, first);
      first = false;
    }
    return out;
  }

  /// Shared by every printer that writes `coef*monomial` sums.
  static void append_signed_term(std::string& out, const Scalar& c, const std::string& mono,
                                 bool first) {
    bool negative = c.is_real() ? sgn(c.re()) < 0 : (sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0));
    Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) out += "- ";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mono.empty()) {
      out += mag.str();
      return;
    }
    if (mag.is_one()) {
      out += mono;
      return;
    }
    bool complex = !mag.is_real() && sgn(mag.re()) != 0;
    out += complex ? "(" + mag.str() + ")" : mag.str();
    out += "*" + mono;
  }

 private:
  static unsigned total_degree(const Exponents& e) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
  }
  void check_arity(const PolyScalar& o) const {
    if (o.arity_ != arity_) throw DimensionError("polynomial arity mismatch");
  }

  std::size_t arity_ = 0;
  Terms terms_;
};

}  // namespace suprep
