#pragma once

// Independent oracles shared by the tests: the defining (1|2)x(1|2) matrix
// realization of osp(1|2), and a seeded source of small random scalars.

#include <array>
#include <random>
#include <string>

#include "suprep/algebra.hpp"
#include "suprep/enveloping.hpp"
#include "suprep/scalar.hpp"

namespace suprep::test {

/// 3x3 matrices over Q(i); row/column 0 is the even coordinate.
using Mat = std::array<std::array<Scalar, 3>, 3>;

inline Mat zero_mat() { return Mat{}; }

inline Mat unit_mat() {
  Mat m{};
  for (int k = 0; k < 3; ++k) m[k][k] = Scalar(1);
  return m;
}

/// E_ij with 1-based indices, as in the matrix basis of osp(1|2).
inline Mat E(int i, int j) {
  Mat m{};
  m[i - 1][j - 1] = Scalar(1);
  return m;
}

inline Mat operator+(const Mat& a, const Mat& b) {
  Mat r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}

inline Mat operator*(const Scalar& s, const Mat& a) {
  Mat r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = s * a[i][j];
  return r;
}

inline Mat operator-(const Mat& a, const Mat& b) { return a + Scalar(-1) * b; }

inline Mat operator*(const Mat& a, const Mat& b) {
  Mat r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline bool operator==(const Mat& a, const Mat& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(a[i][j] == b[i][j])) return false;
  return true;
}

/// x = E13 + E21, y = E12 - E31; the even elements follow from x^2 = X,
/// y^2 = -Y and H = xy + yx.
inline Mat osp_matrix(const std::string& name) {
  if (name == "x") return E(1, 3) + E(2, 1);
  if (name == "y") return E(1, 2) - E(3, 1);
  if (name == "X") return E(2, 3);
  if (name == "Y") return E(3, 2);
  if (name == "H") return E(2, 2) - E(3, 3);
  throw DomainError("no matrix for " + name);
}

inline int osp_parity(const std::string& name) { return (name == "x" || name == "y") ? 1 : 0; }

inline Mat supercommutator(const Mat& a, int pa, const Mat& b, int pb) {
  return a * b - Scalar::sign(pa * pb) * (b * a);
}

/// Image of an element of U(osp(1|2)) in the defining representation.
inline Mat represent(const EnvElement& u) {
  const auto& env = *u.env();
  Mat acc{};
  for (const auto& [m, c] : u.terms()) {
    Mat p = unit_mat();
    for (auto k : env.factors(m)) p = p * osp_matrix(env.algebra().basis_name(k));
    acc = acc + c * p;
  }
  return acc;
}

class RandomScalars {
 public:
  explicit RandomScalars(unsigned seed) : gen_(seed) {}

  mpq_class rational(int bound = 9) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    return mpq_class(num(gen_), den(gen_));
  }
  Scalar scalar(int bound = 9) { return Scalar(rational(bound), rational(bound)); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

 private:
  std::mt19937 gen_;
};

}  // namespace suprep::test

namespace suprep {
using test::operator*;
using test::operator+;
}  // namespace suprep
