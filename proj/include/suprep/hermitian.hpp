#pragma once

// Exact linear algebra over Q(i): null spaces and Hermitian definiteness.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "suprep/error.hpp"
#include "suprep/scalar.hpp"

namespace suprep {

using ScalarVector = std::vector<Scalar>;
using ScalarMatrix = std::vector<ScalarVector>;

inline bool is_hermitian(const ScalarMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (!(m[i][j] == m[j][i].conj())) return false;
  return true;
}

/// Basis of {c : sum_j a[i][j] c_j = 0 for all i}, one vector per free column
/// of the reduced row echelon form (free entry 1, other free entries 0).
inline std::vector<ScalarVector> nullspace(ScalarMatrix a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Scalar inv = a[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<ScalarVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    ScalarVector v(cols);
    v[f] = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// value(c) = sum_{i,j} c_i conj(c_j) g[i][j], i.e. <v, v> for v = sum c_i b_i
/// when g[i][j] = <b_i, b_j>.
inline Scalar hermitian_value(const ScalarMatrix& g, const ScalarVector& c) {
  Scalar v;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) v += c[i] * c[j].conj() * g[i][j];
  return v;
}

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite };

inline std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "positive-definite";
    case Definiteness::PositiveSemidefinite: return "positive-semidefinite-with-kernel";
    case Definiteness::Indefinite: return "indefinite";
  }
  return "?";
}

struct DefinitenessResult {
  Definiteness verdict = Definiteness::PositiveDefinite;
  /// Vector with <w, w> < 0 when indefinite.
  std::optional<ScalarVector> negative_witness;
  Scalar witness_value;
  /// Radical: vectors orthogonal to everything.
  std::vector<ScalarVector> kernel;
};

/// Decides definiteness of a Hermitian Gram matrix by symmetric elimination on
/// positive pivots. Once no positive diagonal pivot remains, the Schur
/// complement is either zero (semidefinite), has a negative diagonal entry, or
/// has a zero diagonal with a nonzero off-diagonal entry (both indefinite).
inline DefinitenessResult classify_hermitian(const ScalarMatrix& g) {
  if (!is_hermitian(g)) throw DomainError("Gram matrix is not Hermitian");
  const std::size_t n = g.size();
  DefinitenessResult out;

  // Radical of the form: c with sum_i c_i g[i][j] = 0 for all j.
  ScalarMatrix gt(n, ScalarVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gt[j][i] = g[i][j];
  out.kernel = nullspace(gt, n);

  ScalarMatrix a = g;
  std::vector<ScalarVector> t(n, ScalarVector(n));
  for (std::size_t k = 0; k < n; ++k) t[k][k] = Scalar(1);
  std::vector<bool> done(n, false);

  for (std::size_t step = 0; step < n; ++step) {
    std::optional<std::size_t> pivot;
    for (std::size_t k = 0; k < n; ++k)
      if (!done[k] && sgn(a[k][k].re()) > 0) {
        pivot = k;
        break;
      }
    if (!pivot) break;
    const std::size_t p = *pivot;
    done[p] = true;
    Scalar inv = a[p][p].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (done[j]) continue;
      Scalar f = a[j][p] * inv;
      if (f.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) t[j][k] -= f * t[p][k];
    }
    ScalarMatrix next = a;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        if (done[j] || done[l]) continue;
        next[j][l] = a[j][l] - a[j][p] * a[p][l] * inv;
      }
    for (std::size_t j = 0; j < n; ++j) {
      if (done[j]) continue;
      next[j][p] = Scalar();
      next[p][j] = Scalar();
    }
    a = std::move(next);
  }

  for (std::size_t k = 0; k < n; ++k) {
    if (done[k] || sgn(a[k][k].re()) >= 0) continue;
    out.verdict = Definiteness::Indefinite;
    out.negative_witness = t[k];
    out.witness_value = hermitian_value(g, t[k]);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (done[i] || done[j] || i == j || a[i][j].is_zero()) continue;
      // <v_i - a_ij v_j, same> = -2 |a_ij|^2 on a zero diagonal.
      ScalarVector w = t[i];
      for (std::size_t k = 0; k < n; ++k) w[k] -= a[i][j] * t[j][k];
      out.verdict = Definiteness::Indefinite;
      out.negative_witness = w;
      out.witness_value = hermitian_value(g, w);
      return out;
    }
  out.verdict = out.kernel.empty() ? Definiteness::PositiveDefinite : Definiteness::PositiveSemidefinite;
  return out;
}

}  // namespace suprep
