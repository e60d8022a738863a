#include <gtest/gtest.h>

#include "support/printers.hpp"

#include "hhodge/cyclo.hpp"

#include <complex>
#include <random>

using namespace hhodge;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

// Oracle: a random formal sum Σ c·e(a/n) evaluated directly in complex doubles.
struct Sample {
  std::vector<std::pair<Rational, Rational>> terms;
  std::complex<double> value() const {
    std::complex<double> z = 0;
    for (const auto& [e, c] : terms) z += c.get_d() * std::polar(1.0, 2 * std::acos(-1.0) * e.get_d());
    return z;
  }
};

// Denominators divide 60 or 24, the desk-scale conductors.
Sample random_sample(std::mt19937& rng) {
  static const int dens[] = {1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30, 60};
  std::uniform_int_distribution<int> den(0, std::size(dens) - 1), coeff(-4, 4), count(1, 4);
  Sample s;
  for (int i = count(rng); i > 0; --i) {
    int d = dens[den(rng)];
    s.terms.emplace_back(q(std::uniform_int_distribution<int>(0, d - 1)(rng), d), q(coeff(rng), 1 + (i % 3)));
  }
  return s;
}

void expect_close(const Cyclotomic& a, std::complex<double> z) {
  EXPECT_NEAR(a.approx().real(), z.real(), 1e-9);
  EXPECT_NEAR(a.approx().imag(), z.imag(), 1e-9);
}

}  // namespace

TEST(Cyclotomic, ArithmeticExamples) {
  Cyclotomic w = Cyclotomic::e(1, 3);
  EXPECT_EQ(cyc_arith(CycOp::mul, w, w), Cyclotomic::e(2, 3));
  EXPECT_EQ(cyc_arith(CycOp::conjugate, w), Cyclotomic::e(2, 3));
  EXPECT_TRUE(cyc_arith(CycOp::add, Cyclotomic::e(1, 5), -Cyclotomic::e(1, 5)).is_zero());
  EXPECT_EQ(cyc_arith(CycOp::negate, w), -w);
  EXPECT_THROW(cyc_arith(CycOp::add, w), std::invalid_argument);
  EXPECT_THROW(cyc_arith(CycOp::conjugate, w, w), std::invalid_argument);
}

TEST(Cyclotomic, AsRational) {
  EXPECT_EQ(cyc_as_rational(Cyclotomic(1) + Cyclotomic::e(1, 2)), Rational(0));
  EXPECT_FALSE(cyc_as_rational(Cyclotomic::e(1, 4)).has_value());
  EXPECT_EQ(cyc_as_rational(Cyclotomic::e(1, 3) + Cyclotomic::e(2, 3)), Rational(-1));
  EXPECT_EQ(cyc_as_rational(Cyclotomic(q(3, 7))), q(3, 7));
}

TEST(Cyclotomic, MinimalConductors) {
  EXPECT_EQ(Cyclotomic::e(1, 6).conductor(), 3);
  EXPECT_EQ(Cyclotomic::e(1, 10).conductor(), 5);
  EXPECT_EQ((Cyclotomic::e(1, 8) + Cyclotomic::e(7, 8)).conductor(), 8);  // √2
  EXPECT_EQ((Cyclotomic::e(1, 3) - Cyclotomic::e(2, 3)).conductor(), 3);  // √−3
  Cyclotomic gauss = Cyclotomic::e(1, 5) - Cyclotomic::e(2, 5) - Cyclotomic::e(3, 5) + Cyclotomic::e(4, 5);
  EXPECT_EQ(gauss.conductor(), 5);
  EXPECT_EQ(gauss * gauss, Cyclotomic(5));
  EXPECT_EQ((Cyclotomic::e(1, 4) * Cyclotomic::e(1, 4)), Cyclotomic(-1));
  EXPECT_EQ((Cyclotomic::e(1, 12) * Cyclotomic::e(1, 4)).conductor(), 3);
}

TEST(Cyclotomic, RootProductsAddExponents) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> den(1, 40);
  for (int t = 0; t < 300; ++t) {
    int a = den(rng), b = den(rng);
    Rational p = q(std::uniform_int_distribution<int>(-a, 2 * a)(rng), a);
    Rational r = q(std::uniform_int_distribution<int>(-b, 2 * b)(rng), b);
    EXPECT_EQ(Cyclotomic::root_of_unity(p) * Cyclotomic::root_of_unity(r), Cyclotomic::root_of_unity(frac_part(p + r)));
  }
}

TEST(Cyclotomic, KroneckerSums) {
  for (long r = 1; r <= 36; ++r) {
    Cyclotomic s;
    for (long k = 0; k < r; ++k) s += Cyclotomic::e(k, r);
    EXPECT_EQ(s, Cyclotomic(r == 1 ? 1 : 0)) << r;
  }
}

TEST(Cyclotomic, MatchesNumericOracle) {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    Sample a = random_sample(rng), b = random_sample(rng);
    Cyclotomic x = Cyclotomic::from_terms(a.terms), y = Cyclotomic::from_terms(b.terms);
    expect_close(x, a.value());
    expect_close(x + y, a.value() + b.value());
    expect_close(x * y, a.value() * b.value());
    expect_close(x.conjugate(), std::conj(a.value()));
    if (std::abs(b.value()) > 1e-6) expect_close(x / y, a.value() / b.value());
    // Zero detection agrees with the oracle.
    EXPECT_EQ((x - y).is_zero(), std::abs(a.value() - b.value()) < 1e-9);
  }
}

TEST(Cyclotomic, CanonicalAcrossComputationPaths) {
  std::mt19937 rng(13);
  for (int t = 0; t < 150; ++t) {
    Cyclotomic a = Cyclotomic::from_terms(random_sample(rng).terms);
    Cyclotomic b = Cyclotomic::from_terms(random_sample(rng).terms);
    Cyclotomic c = Cyclotomic::from_terms(random_sample(rng).terms);
    Cyclotomic lhs = (a + b) * c, rhs = a * c + b * c;
    EXPECT_EQ(lhs, rhs);
    EXPECT_EQ(lhs.terms(), rhs.terms());
    EXPECT_EQ(lhs.conductor(), rhs.conductor());
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Cyclotomic, ConjugationIsInvolutiveAutomorphism) {
  std::mt19937 rng(17);
  for (int t = 0; t < 150; ++t) {
    Cyclotomic a = Cyclotomic::from_terms(random_sample(rng).terms);
    Cyclotomic b = Cyclotomic::from_terms(random_sample(rng).terms);
    EXPECT_EQ(a.conjugate().conjugate(), a);
    EXPECT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
    EXPECT_EQ((a + b).conjugate(), a.conjugate() + b.conjugate());
    Cyclotomic norm = a * a.conjugate();
    EXPECT_EQ(norm, norm.conjugate());
  }
}

TEST(Cyclotomic, InverseAndGalois) {
  std::mt19937 rng(19);
  for (int t = 0; t < 100; ++t) {
    Cyclotomic a = Cyclotomic::from_terms(random_sample(rng).terms);
    if (a.is_zero()) continue;
    EXPECT_EQ(a * a.inverse(), Cyclotomic(1));
    long n = a.conductor();
    for (long s = 1; s < 2 * n; ++s)
      if (gcd_long(s, n) == 1) {
        EXPECT_EQ((a * a).galois(s), a.galois(s) * a.galois(s));
      }
  }
  EXPECT_THROW(Cyclotomic().inverse(), std::domain_error);
  EXPECT_THROW(Cyclotomic::e(1, 3).galois(3), std::invalid_argument);
}

TEST(Cyclotomic, TermsAreReducedAndSorted) {
  Cyclotomic z = Cyclotomic::root_of_unity(q(7, 3));
  auto t = z.terms();
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].first, q(1, 3));
  EXPECT_EQ(t[0].second, 1);
  Cyclotomic w = Cyclotomic::e(1, 7) * Rational(2) + Cyclotomic::e(3, 7);
  auto u = w.terms();
  for (std::size_t i = 1; i < u.size(); ++i) EXPECT_LT(u[i - 1].first, u[i].first);
  for (const auto& [e, c] : u) {
    EXPECT_GE(e, 0);
    EXPECT_LT(e, 1);
    EXPECT_NE(c, 0);
  }
}
