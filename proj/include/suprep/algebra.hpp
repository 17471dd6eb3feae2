#pragma once

// Lie superalgebras given by structure-constant tables, with Cartan, root and
// real-form data.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "suprep/error.hpp"
#include "suprep/scalar.hpp"

namespace suprep {

/// Sparse linear combination of basis elements of g_C.
using LinComb = std::map<std::size_t, Scalar>;

namespace lin {

inline void add_to(LinComb& acc, const LinComb& v, const Scalar& factor = Scalar(1)) {
  if (factor.is_zero()) return;
  for (const auto& [k, c] : v) {
    Scalar& slot = acc[k];
    slot += c * factor;
    if (slot.is_zero()) acc.erase(k);
  }
}

inline LinComb scaled(const LinComb& v, const Scalar& factor) {
  LinComb r;
  add_to(r, v, factor);
  return r;
}

inline LinComb basis(std::size_t k) { return LinComb{{k, Scalar(1)}}; }

inline bool equal(const LinComb& a, const LinComb& b) {
  LinComb d = a;
  add_to(d, b, Scalar(-1));
  return d.empty();
}

}  // namespace lin

/// A root: its values on the Cartan basis and the basis element spanning
/// its root space.
struct Root {
  std::vector<Scalar> coords;
  std::size_t vector = 0;
  bool positive = false;
  bool compact = false;
  friend bool operator==(const Root&, const Root&) = default;
};

/// Functional on h_C: one coordinate per Cartan basis element.
struct Weight {
  std::vector<Scalar> coords;

  bool is_real() const {
    return std::all_of(coords.begin(), coords.end(), [](const Scalar& s) { return s.is_real(); });
  }
  friend bool operator==(const Weight&, const Weight&) = default;
};

/// Raw, unvalidated table. SuperAlgebra::create validates it.
struct AlgebraData {
  std::string name;
  std::vector<std::string> basis_names;
  std::vector<int> parity;
  /// bracket[i][j] = [b_i, b_j]; absent pairs are zero.
  std::map<std::pair<std::size_t, std::size_t>, LinComb> bracket;
  std::vector<std::size_t> cartan;
  /// Names of the highest-weight coordinates, one per Cartan element.
  std::vector<std::string> weight_names;
  std::vector<Root> roots;
  /// Basis elements spanning k_C.
  std::vector<std::size_t> compact;
  /// conjugation[j] = sigma(b_j); sigma is extended conjugate-linearly.
  std::vector<LinComb> conjugation;

  std::size_t dim() const { return basis_names.size(); }
  friend bool operator==(const AlgebraData&, const AlgebraData&) = default;

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t k = 0; k < basis_names.size(); ++k)
      if (basis_names[k] == name) return k;
    return std::nullopt;
  }

  const LinComb& bracket_of(std::size_t a, std::size_t b) const {
    static const LinComb zero;
    auto it = bracket.find({a, b});
    return it == bracket.end() ? zero : it->second;
  }

  LinComb bracket_lin(const LinComb& u, const LinComb& v) const {
    LinComb r;
    for (const auto& [i, ci] : u)
      for (const auto& [j, cj] : v) lin::add_to(r, bracket_of(i, j), ci * cj);
    return r;
  }

  /// sigma extended conjugate-linearly.
  LinComb conj_lin(const LinComb& u) const {
    LinComb r;
    for (const auto& [j, c] : u) lin::add_to(r, conjugation.at(j), c.conj());
    return r;
  }

  std::string render(const LinComb& v) const {
    if (v.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : v) {
      PolyScalar::append_signed_term(out, c, basis_names[k], first);
      first = false;
    }
    return out;
  }
};

/// Outcome of validate_algebra: every failed axiom, plus non-fatal warnings.
struct ValidationReport {
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
  bool ok() const { return failures.empty(); }
};

namespace detail {

/// Rank of a set of rational vectors (exact Gaussian elimination).
inline std::size_t rational_rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][c]) == 0) continue;
      mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Solves sum_s x_s * basis[s] = target over Q; nullopt when inconsistent.
/// `basis` vectors must be linearly independent.
inline std::optional<std::vector<mpq_class>> rational_solve(
    const std::vector<std::vector<mpq_class>>& basis, const std::vector<mpq_class>& target) {
  std::size_t n = basis.size();
  std::size_t m = target.size();
  // Augmented system: rows = coordinates, columns = unknowns + rhs.
  std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(n + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t s = 0; s < n; ++s) a[r][s] = basis[s][r];
    a[r][n] = target[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < m; ++c) {
    std::size_t p = row;
    while (p < m && sgn(a[p][c]) == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || sgn(a[r][c]) == 0) continue;
      mpq_class f = a[r][c] / a[row][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < m; ++r)
    if (sgn(a[r][n]) != 0) return std::nullopt;
  std::vector<mpq_class> x(n, 0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = a[r][n] / a[r][pivot_col[r]];
  return x;
}

inline std::vector<mpq_class> real_parts(const std::vector<Scalar>& v) {
  std::vector<mpq_class> r;
  r.reserve(v.size());
  for (const auto& s : v) r.push_back(s.re());
  return r;
}

}  // namespace detail

/// Checks every axiom of a structure-constant table. Never throws for
/// mathematical failures; they are collected in the report.
inline ValidationReport validate_algebra(const AlgebraData& a) {
  ValidationReport rep;
  const std::size_t n = a.dim();
  auto fail = [&](std::string s) { rep.failures.push_back(std::move(s)); };
  auto nm = [&](std::size_t k) { return a.basis_names.at(k); };

  if (a.parity.size() != n) {
    fail("parity list has " + std::to_string(a.parity.size()) + " entries for " +
         std::to_string(n) + " basis elements");
    return rep;
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (a.parity[k] != 0 && a.parity[k] != 1) fail("parity of " + nm(k) + " is not 0 or 1");
    if (a.basis_names[k] == "i" || a.basis_names[k].empty()) fail("illegal basis name '" + nm(k) + "'");
    for (std::size_t j = 0; j < k; ++j)
      if (a.basis_names[j] == a.basis_names[k]) fail("duplicate basis name " + nm(k));
  }
  for (const auto& [key, v] : a.bracket) {
    if (key.first >= n || key.second >= n) {
      fail("bracket refers to a basis index out of range");
      return rep;
    }
    for (const auto& [k, c] : v) {
      if (k >= n) {
        fail("bracket value refers to a basis index out of range");
        return rep;
      }
      if (a.parity[k] != (a.parity[key.first] + a.parity[key.second]) % 2)
        fail("parity: [" + nm(key.first) + "," + nm(key.second) + "] has a component along " +
             nm(k) + " of the wrong parity");
    }
  }

  // Super-antisymmetry.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Scalar s = Scalar(-1) * Scalar::sign(a.parity[i] * a.parity[j]);
      if (!lin::equal(a.bracket_of(i, j), lin::scaled(a.bracket_of(j, i), s)))
        fail("super-antisymmetry: [" + nm(i) + "," + nm(j) + "] = " + a.render(a.bracket_of(i, j)) +
             " but [" + nm(j) + "," + nm(i) + "] = " + a.render(a.bracket_of(j, i)));
    }
  }

  // Super-Jacobi: [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|}[b,[a,c]].
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = j; k < n; ++k) {
        LinComb lhs = a.bracket_lin(lin::basis(i), a.bracket_of(j, k));
        LinComb rhs = a.bracket_lin(a.bracket_of(i, j), lin::basis(k));
        lin::add_to(rhs, a.bracket_lin(lin::basis(j), a.bracket_of(i, k)),
                    Scalar::sign(a.parity[i] * a.parity[j]));
        if (!lin::equal(lhs, rhs))
          fail("super-Jacobi fails on (" + nm(i) + "," + nm(j) + "," + nm(k) + "): " +
               a.render(lhs) + " != " + a.render(rhs));
      }
    }
  }

  // Cartan subalgebra.
  const std::size_t rank = a.cartan.size();
  if (rank == 0) fail("cartan subalgebra is empty");
  if (a.weight_names.size() != rank)
    fail("weight_names has " + std::to_string(a.weight_names.size()) + " entries for rank " +
         std::to_string(rank));
  std::vector<bool> is_cartan(n, false);
  for (std::size_t h : a.cartan) {
    if (h >= n) {
      fail("cartan index out of range");
      return rep;
    }
    is_cartan[h] = true;
    if (a.parity[h] != 0) fail("cartan element " + nm(h) + " is odd");
  }
  for (std::size_t h1 : a.cartan)
    for (std::size_t h2 : a.cartan)
      if (!a.bracket_of(h1, h2).empty())
        fail("cartan part is not abelian: [" + nm(h1) + "," + nm(h2) + "] != 0");

  // Roots.
  std::vector<int> root_count(n, 0);
  for (const auto& r : a.roots) {
    if (r.vector >= n) {
      fail("root vector index out of range");
      continue;
    }
    ++root_count[r.vector];
    const std::string& v = nm(r.vector);
    if (is_cartan[r.vector]) fail("cartan element " + v + " listed as a root vector");
    if (r.coords.size() != rank) {
      fail("root of " + v + " has " + std::to_string(r.coords.size()) + " coordinates, rank is " +
           std::to_string(rank));
      continue;
    }
    bool zero = true;
    for (const auto& c : r.coords) {
      if (!c.is_real()) fail("root of " + v + " has a non-real coordinate");
      if (!c.is_zero()) zero = false;
    }
    if (zero) fail("root of " + v + " is zero");
    for (std::size_t k = 0; k < rank && k < a.cartan.size(); ++k) {
      LinComb expect = lin::scaled(lin::basis(r.vector), r.coords[k]);
      if (!lin::equal(a.bracket_of(a.cartan[k], r.vector), expect))
        fail("ad(" + nm(a.cartan[k]) + ") on " + v + " gives " +
             a.render(a.bracket_of(a.cartan[k], r.vector)) + ", root predicts " + a.render(expect));
    }
    bool has_negative = false;
    for (const auto& s : a.roots) {
      if (s.coords.size() != r.coords.size()) continue;
      bool neg = true;
      for (std::size_t k = 0; k < rank; ++k)
        if (!(s.coords[k] == -r.coords[k])) neg = false;
      if (neg) {
        has_negative = true;
        if (s.positive == r.positive)
          fail("roots of " + v + " and " + nm(s.vector) + " are negatives but share a positivity flag");
      }
    }
    if (!has_negative) fail("root of " + v + " has no negative in the root list");
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (is_cartan[k]) continue;
    if (root_count[k] == 0) fail("basis element " + nm(k) + " is neither cartan nor a root vector");
    if (root_count[k] > 1) fail("basis element " + nm(k) + " listed as root vector more than once");
  }

  // Real structure.
  if (a.conjugation.size() != n) {
    fail("conjugation has " + std::to_string(a.conjugation.size()) + " rows for dimension " +
         std::to_string(n));
  } else {
    bool in_range = true;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : a.conjugation[j]) {
        if (k >= n) in_range = false;
        else if (a.parity[k] != a.parity[j])
          fail("conjugation does not preserve parity on " + nm(j));
      }
    if (!in_range) {
      fail("conjugation refers to a basis index out of range");
    } else {
      for (std::size_t j = 0; j < n; ++j)
        if (!lin::equal(a.conj_lin(a.conjugation[j]), lin::basis(j)))
          fail("conjugation is not an involution on " + nm(j));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          LinComb lhs = a.conj_lin(a.bracket_of(i, j));
          LinComb rhs = a.bracket_lin(a.conjugation[i], a.conjugation[j]);
          if (!lin::equal(lhs, rhs))
            fail("conjugation does not commute with [" + nm(i) + "," + nm(j) + "]");
        }
      for (std::size_t h : a.cartan)
        for (const auto& [k, c] : a.conjugation[h])
          if (k < n && !is_cartan[k]) fail("conjugation does not preserve h_C (" + nm(h) + ")");

      // The fixed real subspace must have real dimension n.
      std::vector<std::vector<mpq_class>> rows;
      for (std::size_t j = 0; j < n; ++j) {
        for (const Scalar& phase : {Scalar(1), Scalar::i()}) {
          LinComb z = lin::scaled(lin::basis(j), phase);
          lin::add_to(z, a.conj_lin(z));
          std::vector<mpq_class> row(2 * n, 0);
          for (const auto& [k, c] : z) {
            row[k] = c.re();
            row[n + k] = c.im();
          }
          rows.push_back(std::move(row));
        }
      }
      std::size_t real_dim = detail::rational_rank(rows);
      if (real_dim != n)
        fail("fixed points of the conjugation have real dimension " + std::to_string(real_dim) +
             ", expected " + std::to_string(n));
    }
  }

  // Maximal compact subalgebra k_C.
  std::vector<bool> in_k(n, false);
  for (std::size_t k : a.compact) {
    if (k >= n) {
      fail("compact index out of range");
      return rep;
    }
    in_k[k] = true;
    if (a.parity[k] != 0) fail("compact subalgebra contains odd element " + nm(k));
  }
  for (std::size_t h : a.cartan)
    if (!in_k[h]) fail("equal rank: cartan element " + nm(h) + " is not in k_C");
  for (std::size_t i : a.compact) {
    for (std::size_t j : a.compact)
      for (const auto& [k, c] : a.bracket_of(i, j))
        if (!in_k[k]) fail("k_C is not closed: [" + nm(i) + "," + nm(j) + "] leaves k_C");
    if (i < a.conjugation.size())
      for (const auto& [k, c] : a.conjugation[i])
        if (k < n && !in_k[k]) fail("k_C is not stable under conjugation at " + nm(i));
  }
  for (const auto& r : a.roots) {
    if (r.vector >= n) continue;
    if (a.parity[r.vector] == 1) {
      if (r.compact) fail("odd root of " + nm(r.vector) + " flagged compact");
      continue;
    }
    if (r.compact != in_k[r.vector])
      fail("root of " + nm(r.vector) + " flagged " + (r.compact ? "compact" : "noncompact") +
           " but its root vector is " + (in_k[r.vector] ? "in" : "not in") + " k_C");
  }
  if (!a.compact.empty()) {
    // Center of k_C: solve sum_j c_j [k_j, k_i] = 0 for all i.
    std::vector<std::vector<mpq_class>> rows;
    const std::size_t m = a.compact.size();
    for (std::size_t i : a.compact) {
      for (std::size_t out = 0; out < n; ++out) {
        std::vector<mpq_class> re(m, 0), im(m, 0);
        bool any = false;
        for (std::size_t j = 0; j < m; ++j) {
          auto it = a.bracket_of(a.compact[j], i).find(out);
          if (it == a.bracket_of(a.compact[j], i).end()) continue;
          re[j] = it->second.re();
          im[j] = it->second.im();
          any = true;
        }
        if (any) {
          rows.push_back(re);
          rows.push_back(im);
        }
      }
    }
    if (detail::rational_rank(rows) == m)
      rep.warnings.push_back("k_C has trivial center");
  }

  // Positive system must have integral heights over its simple roots.
  if (rep.failures.empty()) {
    std::vector<std::vector<mpq_class>> positives;
    for (const auto& r : a.roots)
      if (r.positive) positives.push_back(detail::real_parts(r.coords));
    std::vector<std::vector<mpq_class>> simple;
    for (const auto& p : positives) {
      bool decomposable = false;
      for (const auto& q : positives)
        for (const auto& s : positives) {
          bool eq = true;
          for (std::size_t k = 0; k < p.size(); ++k)
            if (q[k] + s[k] != p[k]) eq = false;
          if (eq) decomposable = true;
        }
      if (!decomposable &&
          std::find(simple.begin(), simple.end(), p) == simple.end())
        simple.push_back(p);
    }
    if (detail::rational_rank(simple) != simple.size()) {
      fail("simple roots are linearly dependent");
    } else {
      for (const auto& p : positives) {
        auto x = detail::rational_solve(simple, p);
        bool ok = x.has_value();
        if (ok)
          for (const auto& c : *x)
            if (c.get_den() != 1 || sgn(c) < 0) ok = false;
        if (!ok) fail("positive root is not a non-negative integral combination of simple roots");
      }
    }
  }
  return rep;
}

/// Validated, immutable Lie superalgebra with derived root bookkeeping.
class SuperAlgebra {
 public:
  /// Validates `data`; throws ValidationError listing every failure.
  static std::shared_ptr<const SuperAlgebra> create(AlgebraData data) {
    ValidationReport rep = validate_algebra(data);
    if (!rep.ok()) {
      std::string msg = "algebra '" + data.name + "' fails validation:";
      for (const auto& f : rep.failures) msg += "\n  " + f;
      throw ValidationError(msg);
    }
    return std::shared_ptr<const SuperAlgebra>(new SuperAlgebra(std::move(data), std::move(rep)));
  }

  const AlgebraData& data() const { return data_; }
  const std::string& name() const { return data_.name; }
  std::size_t dim() const { return data_.dim(); }
  std::size_t rank() const { return data_.cartan.size(); }
  int parity(std::size_t k) const { return data_.parity[k]; }
  const std::string& basis_name(std::size_t k) const { return data_.basis_names[k]; }
  const std::vector<std::string>& weight_names() const { return data_.weight_names; }
  const std::vector<std::size_t>& cartan() const { return data_.cartan; }
  const std::vector<Root>& roots() const { return data_.roots; }
  const ValidationReport& report() const { return report_; }
  const LinComb& bracket(std::size_t a, std::size_t b) const { return data_.bracket_of(a, b); }
  LinComb bracket(const LinComb& u, const LinComb& v) const { return data_.bracket_lin(u, v); }
  std::optional<std::size_t> index_of(const std::string& n) const { return data_.index_of(n); }

  std::size_t require_index(const std::string& n) const {
    auto k = index_of(n);
    if (!k) throw DomainError("unknown basis element '" + n + "' in algebra " + name());
    return *k;
  }

  /// Root whose root space is spanned by basis element k; nullopt for Cartan.
  const Root* root_of(std::size_t k) const {
    int r = root_index_[k];
    return r < 0 ? nullptr : &data_.roots[static_cast<std::size_t>(r)];
  }
  bool is_cartan(std::size_t k) const { return cartan_slot_[k] >= 0; }
  /// Position of a Cartan basis element among the Cartan coordinates.
  std::size_t cartan_slot(std::size_t k) const { return static_cast<std::size_t>(cartan_slot_[k]); }
  bool is_positive(std::size_t k) const { return root_of(k) && root_of(k)->positive; }
  bool is_negative(std::size_t k) const { return root_of(k) && !root_of(k)->positive; }

  /// Height of the root of basis element k over the simple roots (positive for
  /// both positive and negative root vectors); 0 for Cartan elements.
  unsigned height(std::size_t k) const { return height_[k]; }

  /// Weight of basis element k under ad(h): root coordinates, zero for Cartan.
  std::vector<Scalar> weight_of(std::size_t k) const {
    if (const Root* r = root_of(k)) return r->coords;
    return std::vector<Scalar>(rank(), Scalar());
  }

  /// Basis elements in PBW order: negative root vectors, Cartan, positive root
  /// vectors; inside each root block by height, then input order.
  const std::vector<std::size_t>& pbw_order() const { return pbw_order_; }
  /// Inverse of pbw_order: PBW slot of basis element k.
  std::size_t pbw_slot(std::size_t k) const { return pbw_slot_[k]; }

  /// Image of b_k under the conjugate-linear star antiautomorphism on g_C:
  /// Z^star = -(-1)^{|Z|} sigma(Z).
  LinComb star_of(std::size_t k) const {
    return lin::scaled(data_.conjugation[k], Scalar(parity(k) ? 1 : -1));
  }

  /// Module adjoint for the ordinary Hermitian form: X^dagger = (-i)^{|X|} X^star.
  LinComb dagger_of(std::size_t k) const {
    return lin::scaled(star_of(k), Scalar::pow_minus_i(parity(k)));
  }

  bool is_osp12_like() const { return osp12_like_; }
  bool is_sl2_like() const { return sl2_like_; }

 private:
  SuperAlgebra(AlgebraData data, ValidationReport rep)
      : data_(std::move(data)), report_(std::move(rep)) {
    const std::size_t n = data_.dim();
    root_index_.assign(n, -1);
    cartan_slot_.assign(n, -1);
    height_.assign(n, 0);
    for (std::size_t r = 0; r < data_.roots.size(); ++r)
      root_index_[data_.roots[r].vector] = static_cast<int>(r);
    for (std::size_t s = 0; s < data_.cartan.size(); ++s)
      cartan_slot_[data_.cartan[s]] = static_cast<int>(s);

    std::vector<std::vector<mpq_class>> positives;
    for (const auto& r : data_.roots)
      if (r.positive) positives.push_back(detail::real_parts(r.coords));
    std::vector<std::vector<mpq_class>> simple;
    for (const auto& p : positives) {
      bool decomposable = false;
      for (const auto& q : positives)
        for (const auto& s : positives) {
          bool eq = true;
          for (std::size_t k = 0; k < p.size(); ++k)
            if (q[k] + s[k] != p[k]) eq = false;
          if (eq) decomposable = true;
        }
      if (!decomposable && std::find(simple.begin(), simple.end(), p) == simple.end())
        simple.push_back(p);
    }
    for (const auto& r : data_.roots) {
      auto p = detail::real_parts(r.coords);
      if (!r.positive)
        for (auto& c : p) c = -c;
      auto x = detail::rational_solve(simple, p);
      mpq_class h = 0;
      for (const auto& c : *x) h += c;
      height_[r.vector] = static_cast<unsigned>(h.get_num().get_ui());
    }

    auto block_sorted = [&](auto pred) {
      std::vector<std::size_t> v;
      for (std::size_t k = 0; k < n; ++k)
        if (pred(k)) v.push_back(k);
      std::stable_sort(v.begin(), v.end(),
                       [&](std::size_t a, std::size_t b) { return height_[a] < height_[b]; });
      return v;
    };
    for (auto k : block_sorted([&](std::size_t k) { return is_negative(k); })) pbw_order_.push_back(k);
    for (auto k : data_.cartan) pbw_order_.push_back(k);
    for (auto k : block_sorted([&](std::size_t k) { return is_positive(k); })) pbw_order_.push_back(k);
    pbw_slot_.assign(n, 0);
    for (std::size_t s = 0; s < n; ++s) pbw_slot_[pbw_order_[s]] = s;

    // Rank-one shapes with closed-form unitarity analysis.
    if (rank() == 1) {
      std::size_t odd_pos = 0, even_pos = 0;
      for (const auto& r : data_.roots) {
        if (!r.positive) continue;
        (data_.parity[r.vector] ? odd_pos : even_pos)++;
      }
      sl2_like_ = n == 3 && odd_pos == 0 && even_pos == 1;
      osp12_like_ = n == 5 && odd_pos == 1 && even_pos == 1;
    }
  }

  AlgebraData data_;
  ValidationReport report_;
  std::vector<int> root_index_;
  std::vector<int> cartan_slot_;
  std::vector<unsigned> height_;
  std::vector<std::size_t> pbw_order_;
  std::vector<std::size_t> pbw_slot_;
  bool osp12_like_ = false;
  bool sl2_like_ = false;
};

using AlgebraPtr = std::shared_ptr<const SuperAlgebra>;

/// Overload for an already validated algebra: returns its stored report.
inline ValidationReport validate_algebra(const SuperAlgebra& a) { return a.report(); }

/// H_alpha = [X_alpha, X_{-alpha}] normalized so that alpha(H_alpha) = 2.
/// `root_vector` names the basis element spanning the root space of alpha.
inline LinComb coroot(const SuperAlgebra& a, std::size_t root_vector) {
  const Root* r = a.root_of(root_vector);
  if (!r) throw DomainError(a.basis_name(root_vector) + " is not a root vector");
  if (a.parity(root_vector) != 0)
    throw DomainError("coroot requested for odd root of " + a.basis_name(root_vector));
  const Root* neg = nullptr;
  for (const auto& s : a.roots()) {
    bool is_neg = true;
    for (std::size_t k = 0; k < a.rank(); ++k)
      if (!(s.coords[k] == -r->coords[k])) is_neg = false;
    if (is_neg) neg = &s;
  }
  if (!neg) throw DomainError("root of " + a.basis_name(root_vector) + " has no negative");
  LinComb h = a.bracket(root_vector, neg->vector);
  Scalar alpha_h;
  for (const auto& [k, c] : h) {
    if (!a.is_cartan(k)) throw DomainError("[X_a, X_-a] leaves the Cartan subalgebra");
    alpha_h += c * r->coords[a.cartan_slot(k)];
  }
  if (alpha_h.is_zero())
    throw DomainError("alpha(H_alpha) vanishes for root of " + a.basis_name(root_vector));
  return lin::scaled(h, Scalar(2) / alpha_h);
}

/// lambda(H) for a Cartan element H given as a linear combination.
inline Scalar weight_on(const SuperAlgebra& a, const Weight& lambda, const LinComb& h) {
  if (lambda.coords.size() != a.rank())
    throw DimensionError("weight has " + std::to_string(lambda.coords.size()) +
                         " coordinates, rank is " + std::to_string(a.rank()));
  Scalar v;
  for (const auto& [k, c] : h) {
    if (!a.is_cartan(k)) throw DomainError(a.basis_name(k) + " is not a Cartan element");
    v += c * lambda.coords[a.cartan_slot(k)];
  }
  return v;
}

namespace detail {

inline void set_bracket(AlgebraData& d, const std::string& a, const std::string& b, LinComb v) {
  std::size_t i = *d.index_of(a), j = *d.index_of(b);
  Scalar s = Scalar(-1) * Scalar::sign(d.parity[i] * d.parity[j]);
  LinComb w = lin::scaled(v, s);
  if (!v.empty()) d.bracket[{i, j}] = std::move(v);
  if (!w.empty()) d.bracket[{j, i}] = std::move(w);
}

inline LinComb term(const AlgebraData& d, const std::string& name, Scalar c) {
  return LinComb{{*d.index_of(name), std::move(c)}};
}

}  // namespace detail

/// The even part sl(2) with basis H, X, Y and real form sl(2,R) with compact
/// Cartan (iH real): the root 2alpha (H-value 2) is noncompact.
inline AlgebraData sl2_data() {
  AlgebraData d;
  d.name = "sl2";
  d.basis_names = {"H", "X", "Y"};
  d.parity = {0, 0, 0};
  using detail::set_bracket, detail::term;
  set_bracket(d, "H", "X", term(d, "X", 2));
  set_bracket(d, "H", "Y", term(d, "Y", -2));
  set_bracket(d, "X", "Y", term(d, "H", 1));
  d.cartan = {0};
  d.weight_names = {"t"};
  d.roots = {Root{{Scalar(2)}, 1, true, false}, Root{{Scalar(-2)}, 2, false, false}};
  d.compact = {0};
  d.conjugation = {term(d, "H", -1), term(d, "Y", 1), term(d, "X", 1)};
  return d;
}

/// osp(1|2) with H, X, Y even and x = E13 + E21, y = E12 - E31 odd.
inline AlgebraData osp12_data() {
  AlgebraData d;
  d.name = "osp12";
  d.basis_names = {"H", "X", "Y", "x", "y"};
  d.parity = {0, 0, 0, 1, 1};
  using detail::set_bracket, detail::term;
  set_bracket(d, "H", "X", term(d, "X", 2));
  set_bracket(d, "H", "Y", term(d, "Y", -2));
  set_bracket(d, "X", "Y", term(d, "H", 1));
  set_bracket(d, "H", "x", term(d, "x", 1));
  set_bracket(d, "H", "y", term(d, "y", -1));
  set_bracket(d, "x", "x", term(d, "X", 2));
  set_bracket(d, "y", "y", term(d, "Y", -2));
  set_bracket(d, "x", "y", term(d, "H", 1));
  set_bracket(d, "X", "y", term(d, "x", -1));
  set_bracket(d, "Y", "x", term(d, "y", -1));
  d.cartan = {0};
  d.weight_names = {"t"};
  d.roots = {Root{{Scalar(2)}, 1, true, false}, Root{{Scalar(-2)}, 2, false, false},
             Root{{Scalar(1)}, 3, true, false}, Root{{Scalar(-1)}, 4, false, false}};
  d.compact = {0};
  d.conjugation = {term(d, "H", -1), term(d, "Y", 1), term(d, "X", 1), term(d, "y", Scalar(0, -1)),
                   term(d, "x", Scalar(0, -1))};
  return d;
}

inline AlgebraPtr builtin_osp12() {
  static const AlgebraPtr a = SuperAlgebra::create(osp12_data());
  return a;
}

inline AlgebraPtr builtin_sl2() {
  static const AlgebraPtr a = SuperAlgebra::create(sl2_data());
  return a;
}

}  // namespace suprep
