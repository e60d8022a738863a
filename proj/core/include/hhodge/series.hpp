#pragma once

#include "hhodge/cyclo.hpp"
#include "hhodge/rational.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace hhodge {

class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  // Coefficient of z^i, zero beyond the degree.
  Rational coefficient(std::size_t i) const;
  const std::vector<Rational>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational operator()(const Rational& z) const;

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.c_ == b.c_; }
  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

// Power series in one or two variables, truncated at total degree `order`.
class TruncSeries {
 public:
  TruncSeries(int nvars, int order);

  static TruncSeries constant(int nvars, int order, const Cyclotomic& c);
  static TruncSeries variable(int nvars, int order, int which);

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  // Zero beyond the truncation order or for b != 0 in one variable.
  const Cyclotomic& coeff(int a, int b = 0) const;
  void set(int a, int b, const Cyclotomic& c);
  void add(int a, int b, const Cyclotomic& c);
  // Nonzero terms as (a, b, coefficient), ordered by total degree then a descending.
  std::vector<std::tuple<int, int, Cyclotomic>> terms() const;
  bool is_zero() const;

  TruncSeries truncated(int order) const;
  // Needs an invertible constant term; throws std::domain_error otherwise.
  TruncSeries inverse() const;
  // f(c·t) for a univariate f, or f(c₀·x₊, c₁·x₋) with both factors equal to c.
  TruncSeries rescaled(const Rational& c) const;
  // Univariate only: self ∘ inner, inner having zero constant term.
  TruncSeries compose(const TruncSeries& inner) const;
  // Univariate only: the bivariate series f(x₊) (which = 0) or f(x₋) (which = 1).
  TruncSeries lift(int which) const;

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const TruncSeries& o);
  TruncSeries& operator*=(const Cyclotomic& c);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const TruncSeries& b) { return a *= b; }
  friend TruncSeries operator*(TruncSeries a, const Cyclotomic& c) { return a *= c; }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

  std::string to_string(const std::string& x = "x", const std::string& y = "y") const;

 private:
  std::size_t slot(int a, int b) const;
  void require_compatible(const TruncSeries& o) const;

  int nvars_;
  int order_;
  std::vector<Cyclotomic> c_;
};

Rational bernoulli_number(int n);  // B_1 = -1/2
RationalPolynomial bernoulli_polynomial(int n);
// (B_n(q) - B_n(0)) / n!
Rational delta_bernoulli(int n, const Rational& q);

// 𝔉_{r,k}(t) = (e^{kt/r} - 1)/(e^t - 1): coefficient of t^j is δB_{j+1}(k/r).
TruncSeries frk_series(int r, int k, int order);
// F_{r,k}(x) = (x^k - 1)/(x^r - 1) in u = x - 1.
TruncSeries frk_at_one_series(int r, int k, int order);
// F_r(x, 1) = 1/(x-1) - r/(x^r - 1) in u = x - 1.
TruncSeries f_r_at_one_series(int r, int order);
// IIF_{r,k} in (u₊, u₋) = (x₊ - 1, x₋ - 1) from the closed form
// (F_{r,k}(x₊) + F_{r,r-k}(x₋) - 1)/(x₊x₋ - 1).
TruncSeries iif_series(int r, int k, int order);
// Σ_k F_{r,k}(x)·e(l/r)^k in u = x - 1.
TruncSeries f_r_eval_at_root(int r, int l, int order);

// Helpers shared by the Chern character formulas.
TruncSeries exp_series(int order, const Rational& scale);           // e^{scale·t}
TruncSeries log_one_plus_series(int order);                         // log(1 + u)
TruncSeries difference_quotient_exp_series(int order);               // (e^u - 1)/u
// Given N(u₊,u₋) known modulo degree > order+1 and divisible by x₊x₋ - 1 = u₊ + u₋ + u₊u₋,
// returns N/(x₊x₋ - 1) to `order`. Throws std::domain_error if not divisible.
TruncSeries divide_by_diagonal(const TruncSeries& numerator, int order);

}  // namespace hhodge
