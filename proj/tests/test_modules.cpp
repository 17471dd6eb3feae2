#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "support.hpp"
#include "suprep/center.hpp"
#include "suprep/ktype.hpp"
#include "suprep/report.hpp"
#include "suprep/unitarity.hpp"
#include "suprep/verma.hpp"

namespace suprep {
namespace {

PolyScalar T() { return PolyScalar::variable(1, 0); }
PolyScalar C(long n) { return PolyScalar(1, Scalar(n)); }
Weight W(const mpq_class& t) { return Weight{{Scalar(t)}}; }

/// c_r with x y^r v_t = c_r y^{r-1} v_t: c_{2m} = -m, c_{2m+1} = t - m.
PolyScalar lemma_c(unsigned r) {
  long m = r / 2;
  return r % 2 == 0 ? C(-m) : T() - C(m);
}

class OspModule : public ::testing::Test {
 protected:
  EnvelopingPtr env = Enveloping::create(builtin_osp12());
  std::size_t k(const char* n) const { return env->algebra().require_index(n); }
  EnvElement e(const std::string& s) const { return parse_element(env, s); }
};

class Sl2Module : public ::testing::Test {
 protected:
  EnvelopingPtr env = Enveloping::create(builtin_sl2());
  std::size_t k(const char* n) const { return env->algebra().require_index(n); }
  EnvElement e(const std::string& s) const { return parse_element(env, s); }
};

TEST_F(OspModule, BasisAndParities) {
  VermaModule v = VermaModule::symbolic(env, 3);
  const std::vector<std::string> expect{"", "y", "Y", "y*Y"};
  for (unsigned d = 0; d <= 3; ++d) {
    ASSERT_EQ(v.level(d).size(), 1u);
    EXPECT_EQ(env->render_monomial(v.level(d)[0]), expect[d]);
    EXPECT_EQ(v.parity_of(v.level(d)[0]), static_cast<int>(d % 2));
  }
  EXPECT_THROW(v.level(4), DepthError);
  // y^r v_t agrees with the PBW basis vector up to sign.
  for (unsigned r = 0; r <= 3; ++r) {
    VermaVector yr = v.from_element(e("y^" + std::to_string(r)));
    ASSERT_EQ(yr.size(), 1u);
    EXPECT_EQ(yr.begin()->first, v.level(r)[0]);
  }
}

TEST_F(Sl2Module, Basis) {
  VermaModule v = VermaModule::symbolic(env, 2);
  EXPECT_EQ(env->render_monomial(v.level(1)[0]), "Y");
  EXPECT_EQ(env->render_monomial(v.level(2)[0]), "Y^2");
  VermaModule z = VermaModule::symbolic(env, 0);
  EXPECT_EQ(z.level(0).size(), 1u);
  EXPECT_EQ(z.parity_of(z.level(0)[0]), 0);
}

TEST_F(OspModule, LemmaCoefficients) {
  VermaModule v = VermaModule::symbolic(env, 12);
  for (unsigned r = 1; r <= 12; ++r) {
    VermaVector yr = v.from_element(e("y^" + std::to_string(r)));
    VermaVector below = v.from_element(e("y^" + std::to_string(r - 1)));
    VermaVector xv = v.act(k("x"), yr);
    ASSERT_EQ(xv.size(), 1u);
    ASSERT_EQ(xv.begin()->first, below.begin()->first);
    EXPECT_EQ(xv.begin()->second, lemma_c(r) * below.begin()->second) << "r = " << r;
  }
}

TEST_F(OspModule, ActExamples) {
  VermaModule v = VermaModule::symbolic(env, 5);
  VermaVector y4 = v.from_element(e("y^4")), y3 = v.from_element(e("y^3")), y2 = v.from_element(e("y^2"));
  auto scaled = [&](VermaVector a, const PolyScalar& p) {
    for (auto& [m, c] : a) c *= p;
    return a;
  };
  EXPECT_EQ(v.act(k("x"), y4), scaled(y3, C(-2)));
  EXPECT_EQ(v.act(k("x"), y3), scaled(y2, T() - C(1)));
  for (unsigned r = 0; r <= 5; ++r) {
    VermaVector yr = v.from_element(e("y^" + std::to_string(r)));
    EXPECT_EQ(v.act(k("H"), yr), scaled(yr, T() - C(r)));
  }
  VermaVector top = v.basis_vector(5, 0);
  EXPECT_THROW(v.act(k("y"), top), DepthError);
}

TEST_F(Sl2Module, EquationOneCoefficients) {
  VermaModule v = VermaModule::symbolic(env, 12);
  for (unsigned r = 0; r <= 10; ++r) {
    VermaVector up = v.act(k("X"), v.basis_vector(r + 1, 0));
    ASSERT_EQ(up.size(), 1u);
    EXPECT_EQ(up.begin()->first, v.level(r)[0]);
    EXPECT_EQ(up.begin()->second, C(r + 1) * (T() - C(r)));
  }
}

TEST_F(OspModule, ShapovalovExamples) {
  VermaModule v = VermaModule::symbolic(env, 4);
  EXPECT_EQ(v.shapovalov(v.basis_vector(0, 0), v.basis_vector(0, 0)), C(1));
  EXPECT_EQ(v.shapovalov(v.basis_vector(1, 0), v.basis_vector(1, 0)), C(0) - T());
  EXPECT_TRUE(v.shapovalov(v.basis_vector(2, 0), v.basis_vector(0, 0)).is_zero());
}

TEST_F(Sl2Module, ShapovalovExamples) {
  VermaModule v = VermaModule::symbolic(env, 2);
  EXPECT_EQ(v.shapovalov(v.basis_vector(1, 0), v.basis_vector(1, 0)), C(0) - T());
  Weight w = W(-1);
  VermaModule n = VermaModule::numeric(env, w, 2);
  EXPECT_EQ(gram(n, 1).numeric()[0][0], Scalar(1));
  EXPECT_EQ(gram(n, 2).numeric()[0][0], Scalar(4));
}

TEST_F(OspModule, GramNumericExample) {
  VermaModule v = verma(env, W(-1), 4);
  const long expect[] = {1, 1, 1, 2, 4};
  for (unsigned d = 0; d <= 4; ++d) {
    GramLevel g = gram(v, d);
    ASSERT_EQ(g.matrix.size(), 1u);
    EXPECT_EQ(g.numeric()[0][0], Scalar(expect[d]));
    EXPECT_EQ(g.verdict->verdict, Definiteness::PositiveDefinite);
  }
}

TEST_F(OspModule, GramDiagonalMatchesProductFormula) {
  VermaModule v = VermaModule::symbolic(env, 12);
  PolyScalar n = C(1);
  for (unsigned r = 0; r <= 12; ++r) {
    if (r > 0) n *= C(0) - lemma_c(r);
    GramLevel g = gram(v, r);
    ASSERT_EQ(g.matrix.size(), 1u);
    EXPECT_EQ(g.matrix[0][0], n) << "r = " << r;
  }
}

TEST_F(Sl2Module, GramDiagonalMatchesProductFormula) {
  VermaModule v = VermaModule::symbolic(env, 12);
  PolyScalar n = C(1);
  for (unsigned r = 0; r <= 12; ++r) {
    if (r > 0) n *= C(-static_cast<long>(r)) * (T() - C(r) + C(1));
    EXPECT_EQ(gram(v, r).matrix[0][0], n) << "r = " << r;
  }
}

TEST(ClosedForm, FactorsMatchEngineRatios) {
  for (auto a : {builtin_osp12(), builtin_sl2()}) {
    VermaModule v = VermaModule::symbolic(Enveloping::create(a), 10);
    PolyScalar prev = C(1);
    for (unsigned r = 1; r <= 10; ++r) {
      LinearFactor f = closed_form_factor(*a, r);
      PolyScalar factor = T() * Scalar(f.slope) + C(0) + PolyScalar(1, Scalar(f.offset));
      PolyScalar n = gram(v, r).matrix[0][0];
      EXPECT_EQ(n, prev * factor) << a->name() << " r = " << r;
      prev = n;
    }
  }
  EXPECT_TRUE(closed_form_verdict(*builtin_osp12(), -1).unitary);
  EXPECT_TRUE(closed_form_verdict(*builtin_osp12(), mpq_class(-1, 7)).unitary);
  auto half = closed_form_verdict(*builtin_osp12(), mpq_class(1, 2));
  EXPECT_FALSE(half.unitary);
  EXPECT_EQ(half.first_bad_level, 1u);
  auto zero = closed_form_verdict(*builtin_sl2(), 0);
  EXPECT_TRUE(zero.reducible);
  EXPECT_EQ(zero.first_bad_level, 1u);
}

// <g u, v> = <u, g^dagger v> on a module with several vectors per level.
void check_contravariance(const EnvelopingPtr& env, unsigned depth) {
  const auto& a = env->algebra();
  VermaModule v = VermaModule::symbolic(env, depth + 2);
  for (std::size_t g = 0; g < a.dim(); ++g)
    for (unsigned d1 = 0; d1 <= depth; ++d1)
      for (std::size_t i = 0; i < v.level(d1).size(); ++i)
        for (unsigned d2 = 0; d2 <= depth; ++d2)
          for (std::size_t j = 0; j < v.level(d2).size(); ++j) {
            VermaVector u = v.basis_vector(d1, i), w = v.basis_vector(d2, j);
            EXPECT_EQ(v.shapovalov(v.act(g, u), w), v.shapovalov(u, v.act(a.dagger_of(g), w)))
                << a.basis_name(g) << " levels " << d1 << "," << d2;
          }
}

TEST_F(OspModule, Contravariance) { check_contravariance(env, 6); }
TEST_F(Sl2Module, Contravariance) { check_contravariance(env, 6); }

TEST_F(OspModule, ParityAndWeightOrthogonality) {
  VermaModule v = VermaModule::symbolic(env, 6);
  for (unsigned d1 = 0; d1 <= 6; ++d1)
    for (const auto& m : v.level(d1))
      for (unsigned d2 = 0; d2 <= 6; ++d2)
        for (const auto& n : v.level(d2)) {
          if (d1 == d2 && v.parity_of(m) == v.parity_of(n)) continue;
          EXPECT_TRUE(v.basis_form(m, n).is_zero());
        }
}

TEST_F(OspModule, GramIsHermitian) {
  for (long t : {-3, 1, 4}) {
    VermaModule v = verma(env, W(t), 6);
    for (unsigned d = 0; d <= 6; ++d) EXPECT_TRUE(is_hermitian(gram(v, d).numeric()));
  }
}

// act(g1, act(g2, .)) - (-1)^{|g1||g2|} act(g2, act(g1, .)) = act([g1, g2], .)
void check_relations(const EnvelopingPtr& env, unsigned depth) {
  const auto& a = env->algebra();
  VermaModule v = VermaModule::symbolic(env, depth + 4);
  for (std::size_t g1 = 0; g1 < a.dim(); ++g1)
    for (std::size_t g2 = 0; g2 < a.dim(); ++g2)
      for (unsigned d = 0; d <= depth; ++d)
        for (std::size_t i = 0; i < v.level(d).size(); ++i) {
          VermaVector b = v.basis_vector(d, i);
          VermaVector lhs = v.act(g1, v.act(g2, b));
          Scalar s = Scalar(-1) * Scalar::sign(a.parity(g1) * a.parity(g2));
          for (const auto& [m, p] : v.act(g2, v.act(g1, b))) detail::add_to(lhs, m, p * s);
          EXPECT_EQ(lhs, v.act(a.bracket(g1, g2), b)) << a.basis_name(g1) << "," << a.basis_name(g2);
        }
}

TEST_F(OspModule, DefiningRelations) { check_relations(env, 5); }
TEST_F(Sl2Module, DefiningRelations) { check_relations(env, 5); }

TEST_F(OspModule, RadicalIsAnIdeal) {
  for (long t : {0, 1, 2}) {
    VermaModule v = verma(env, W(t), 9);
    auto sing = singular_vectors(v, 7);
    ASSERT_FALSE(sing.empty());
    for (const auto& s : sing)
      for (std::size_t g = 0; g < env->dim(); ++g) {
        VermaVector image = v.act(g, s.vector);
        if (image.empty()) continue;
        // The image has a single weight, so lies in one level.
        unsigned level = v.depth_of(image.begin()->first);
        if (level > 7) continue;
        GramLevel gl = gram(v, level);
        for (std::size_t j = 0; j < gl.basis.size(); ++j)
          EXPECT_TRUE(v.shapovalov(image, v.basis_vector(level, j)).is_zero()) << "t = " << t;
      }
  }
}

TEST_F(OspModule, Certificates) {
  auto c = unitarity_certificate(env, W(-1), 8);
  EXPECT_EQ(c.status, UnitarityStatus::UnitaryToDepth);
  EXPECT_EQ(c.label(), "UnitaryToDepth(8)");

  c = unitarity_certificate(env, W(mpq_class(1, 2)), 2);
  EXPECT_EQ(c.status, UnitarityStatus::NotUnitary);
  EXPECT_EQ(c.failing_level, 1u);
  EXPECT_EQ(c.witness_value, Scalar(mpq_class(-1, 2)));
  VermaModule v = verma(env, W(mpq_class(1, 2)), 2);
  EXPECT_EQ(v.shapovalov(c.witness_vector, c.witness_vector).constant(), c.witness_value);

  EXPECT_THROW(unitarity_certificate(env, Weight{{Scalar(0, 1)}}, 2), DomainError);

  c = unitarity_certificate(env, W(0), 4);
  EXPECT_EQ(c.status, UnitarityStatus::QuotientUnitaryToDepth);
  EXPECT_EQ(c.first_kernel_level, 1u);
}

TEST_F(OspModule, CertificateSignPattern) {
  test::RandomScalars rng(21);
  for (int n = 0; n < 12; ++n) {
    mpq_class t = rng.rational(6);
    if (t.get_den() == 1 && sgn(t) >= 0) continue;
    auto c = unitarity_certificate(env, W(t), 8);
    if (sgn(t) < 0)
      EXPECT_EQ(c.status, UnitarityStatus::UnitaryToDepth) << t.get_str();
    else
      EXPECT_EQ(c.status, UnitarityStatus::NotUnitary) << t.get_str();
  }
}

TEST_F(Sl2Module, Certificate) {
  auto c = unitarity_certificate(env, W(mpq_class(-3, 2)), 10);
  EXPECT_EQ(c.label(), "UnitaryToDepth(10)");
}

TEST_F(OspModule, NecessaryConditions) {
  const auto& a = env->algebra();
  auto r = necessary_conditions(a, W(-2));
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.conditions.size(), 1u);
  EXPECT_FALSE(r.conditions[0].compact);
  EXPECT_EQ(r.conditions[0].value, Scalar(-2));
  EXPECT_FALSE(necessary_conditions(a, W(3)).passed());
  EXPECT_TRUE(necessary_conditions(a, W(0)).passed());
}

TEST_F(Sl2Module, SingularVectors) {
  VermaModule v = verma(env, W(2), 4);
  auto s = singular_vectors(v, 4);
  ASSERT_FALSE(s.empty());
  EXPECT_EQ(s[0].level, 3u);
  EXPECT_TRUE(s[0].primitive);
  EXPECT_EQ(v.render(s[0].vector), "Y^3*v");
  // Oracle: X Y^3 v_t = 3 Y^2 (H - 2) v_t vanishes at t = 2.
  EXPECT_TRUE(v.act(k("X"), v.from_element(e("Y^3"))).empty());
}

TEST_F(OspModule, SingularVectors) {
  EXPECT_TRUE(singular_vectors(verma(env, W(-1), 6), 6).empty());
  auto one = singular_vectors(verma(env, W(1), 4), 4);
  ASSERT_FALSE(one.empty());
  EXPECT_EQ(one[0].level, 3u);
  EXPECT_TRUE(one[0].primitive);
  auto zero = singular_vectors(verma(env, W(0), 2), 2);
  ASSERT_FALSE(zero.empty());
  EXPECT_EQ(zero[0].level, 1u);
  EXPECT_THROW(singular_vectors(VermaModule::symbolic(env, 2), 2), DomainError);
}

TEST_F(OspModule, DecomposeEven) {
  VermaModule v = VermaModule::symbolic(env, 3);
  auto dec = decompose_even(v);
  std::vector<std::string> top, bottom;
  for (const auto& m : dec.top) top.push_back(render_basis_vector(*env, m));
  for (const auto& m : dec.bottom) bottom.push_back(render_basis_vector(*env, m));
  EXPECT_EQ(top, (std::vector<std::string>{"v", "Y*v"}));
  EXPECT_EQ(bottom, (std::vector<std::string>{"y*v", "y*Y*v"}));
  // Spectra t - 2j and t - 1 - 2j never meet.
  for (const auto& p : dec.top_spectrum)
    for (const auto& q : dec.bottom_spectrum) {
      PolyScalar diff = p - q;
      EXPECT_TRUE(diff.is_constant() && !diff.is_zero());
    }
  // Even generators keep each summand.
  std::set<Monomial> bottom_set(dec.bottom.begin(), dec.bottom.end());
  for (const char* g : {"H", "X", "Y"})
    for (const auto& m : dec.bottom) {
      VermaVector b;
      b.emplace(m, C(1));
      if (v.depth_of(m) + 2 > v.depth()) continue;
      for (const auto& [mm, c] : v.act(k(g), b)) EXPECT_TRUE(bottom_set.count(mm)) << g;
    }
  EXPECT_THROW(decompose_even(VermaModule::symbolic(Enveloping::create(builtin_sl2()), 2)), DomainError);
}

TEST(Center, Sl2Casimir) {
  auto env = Enveloping::create(builtin_sl2());
  auto z = center_candidates(env, 2);
  ASSERT_EQ(z.size(), 2u);
  EXPECT_EQ(z[0], EnvElement::scalar(env, Scalar(1)));
  // Proportional to H^2 + 2H + 4YX.
  EnvElement omega = parse_element(env, "H^2 + 2*H + 4*Y*X");
  EXPECT_EQ(Scalar(4) * z[1], omega);
  for (const char* g : {"H", "X", "Y"}) {
    EnvElement x = parse_element(env, g);
    EXPECT_TRUE((x * omega - omega * x).is_zero());
  }
  ASSERT_EQ(center_candidates(env, 0).size(), 1u);
}

TEST(Center, OspQuadratic) {
  auto env = Enveloping::create(builtin_osp12());
  auto z = center_candidates(env, 2);
  bool quadratic = false;
  for (const auto& c : z) {
    for (const auto& [m, coef] : c.terms()) {
      unsigned deg = 0;
      for (auto e : m) deg += e;
      if (deg == 2) quadratic = true;
    }
    for (std::size_t g = 0; g < env->dim(); ++g)
      EXPECT_TRUE(supercommutator(EnvElement::basis(env, g), c).is_zero());
  }
  EXPECT_TRUE(quadratic);
}

TEST(KTypes, OddPartAndQ) {
  auto env = Enveloping::create(builtin_osp12());
  auto r = odd_part_basis(*env);
  ASSERT_EQ(r.size(), 4u);
  std::multiset<Scalar> weights;
  for (const auto& m : r) weights.insert(env->weight(m)[0]);
  EXPECT_EQ(weights, (std::multiset<Scalar>{Scalar(-1), Scalar(0), Scalar(0), Scalar(1)}));

  KTypeTable trivial;
  trivial.entries[{Scalar(0)}] = 1;
  auto b = induce_ktype_bound(env, trivial, {Scalar(0)});
  EXPECT_GE(b.bound, 1u);
  EXPECT_LE(b.q_set.size(), 4u);
  EXPECT_EQ(b.bound, 4u);

  KTypeTable ints;
  ints.complete = false;
  ints.integral_default = 1;
  for (long p = -5; p <= 5; ++p) {
    auto bb = induce_ktype_bound(env, ints, {Scalar(p)});
    EXPECT_LE(bb.bound, bb.dim_r * bb.q_set.size());
  }
  KTypeTable partial;
  partial.complete = false;
  partial.entries[{Scalar(0)}] = 1;
  try {
    induce_ktype_bound(env, partial, {Scalar(0)});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("q = -1"), std::string::npos);
  }
}

TEST(KTypes, TableParsing) {
  auto t = parse_ktype_table("# c\ncomplete: no\nintegral_default: 2\n1/2 = 3\n", 1);
  EXPECT_FALSE(t.complete);
  EXPECT_EQ(t.multiplicity({Scalar(mpq_class(1, 2))}), 3u);
  EXPECT_EQ(t.multiplicity({Scalar(4)}), 2u);
  EXPECT_FALSE(t.multiplicity({Scalar(mpq_class(1, 3))}).has_value());
  EXPECT_THROW(parse_ktype_table("0 = -1\n", 1), ParseError);
  EXPECT_THROW(parse_ktype_table("0 1 = 1\n", 1), ParseError);
  EXPECT_THROW(parse_ktype_table("0 = 1\n0 = 2\n", 1), ParseError);
}

TEST(KTypes, TabulatedNonabelian) {
  TensorRule rule;
  rule.r_types = {"1", "2"};
  rule.contained[{"1", "2"}] = {"2"};
  rule.contained[{"2", "2"}] = {"1", "3"};
  std::map<std::string, unsigned long> mult{{"1", 1}, {"2", 2}, {"3", 1}};
  auto b = induce_ktype_bound_tabulated(4, mult, rule, "2");
  EXPECT_EQ(b.multiplicity_sum, 4u);
  EXPECT_EQ(b.bound, 16u);
  EXPECT_THROW(induce_ktype_bound_tabulated(4, mult, rule, "3"), DomainError);
}

TEST(Scan, GridAnchoredAtMultiples) {
  auto g = scan_grid(-2, 2, mpq_class(1, 2));
  ASSERT_EQ(g.size(), 9u);
  EXPECT_EQ(g.front(), -2);
  EXPECT_EQ(g[5], mpq_class(1, 2));
  EXPECT_TRUE(scan_grid(mpq_class(1, 3), mpq_class(1, 3), mpq_class(1, 2)).empty());
  EXPECT_EQ(scan_grid(mpq_class(-1, 3), 1, mpq_class(1, 2)).front(), 0);
  EXPECT_THROW(scan_grid(0, 1, 0), DomainError);
}

TEST(Scan, ParallelMatchesSerial) {
  auto grid = scan_grid(-3, 3, mpq_class(1, 4));
  auto serial = unitary_scan(builtin_osp12(), grid, 6, 1);
  auto parallel = unitary_scan(builtin_osp12(), grid, 6, 4);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) {
    EXPECT_EQ(serial[k].verdict, parallel[k].verdict);
    EXPECT_EQ(serial[k].level, parallel[k].level);
  }
}

}  // namespace
}  // namespace suprep
