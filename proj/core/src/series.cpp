#include "hhodge/series.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hhodge {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational RationalPolynomial::coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

Rational RationalPolynomial::operator()(const Rational& z) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::string RationalPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    if (i > 0) os << "*z^" << i;
  }
  return os.str();
}

TruncSeries::TruncSeries(int nvars, int order) : nvars_(nvars), order_(order) {
  if (nvars != 1 && nvars != 2) throw std::invalid_argument("series need one or two variables");
  if (order < 0) throw std::invalid_argument("negative truncation order");
  c_.resize(nvars == 1 ? order + 1 : static_cast<std::size_t>(order + 1) * (order + 2) / 2);
}

TruncSeries TruncSeries::constant(int nvars, int order, const Cyclotomic& c) {
  TruncSeries s(nvars, order);
  s.set(0, 0, c);
  return s;
}

TruncSeries TruncSeries::variable(int nvars, int order, int which) {
  TruncSeries s(nvars, order);
  if (order >= 1) s.set(which == 0 ? 1 : 0, which == 0 ? 0 : 1, Cyclotomic(1));
  return s;
}

// Bivariate terms are stored by total degree d, then by the x₋ exponent.
std::size_t TruncSeries::slot(int a, int b) const {
  if (nvars_ == 1) return static_cast<std::size_t>(a);
  int d = a + b;
  return static_cast<std::size_t>(d) * (d + 1) / 2 + b;
}

const Cyclotomic& TruncSeries::coeff(int a, int b) const {
  static const Cyclotomic zero;
  if (a < 0 || b < 0 || a + b > order_ || (nvars_ == 1 && b != 0)) return zero;
  return c_[slot(a, b)];
}

void TruncSeries::set(int a, int b, const Cyclotomic& c) {
  if (a < 0 || b < 0 || (nvars_ == 1 && b != 0)) throw std::invalid_argument("bad series exponent");
  if (a + b > order_) return;
  c_[slot(a, b)] = c;
}

void TruncSeries::add(int a, int b, const Cyclotomic& c) {
  if (a < 0 || b < 0 || (nvars_ == 1 && b != 0)) throw std::invalid_argument("bad series exponent");
  if (a + b > order_) return;
  c_[slot(a, b)] += c;
}

std::vector<std::tuple<int, int, Cyclotomic>> TruncSeries::terms() const {
  std::vector<std::tuple<int, int, Cyclotomic>> out;
  for (int d = 0; d <= order_; ++d)
    for (int b = 0; b <= (nvars_ == 1 ? 0 : d); ++b) {
      const Cyclotomic& c = coeff(d - b, b);
      if (!c.is_zero()) out.emplace_back(d - b, b, c);
    }
  return out;
}

bool TruncSeries::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

void TruncSeries::require_compatible(const TruncSeries& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("series in different variables");
}

TruncSeries TruncSeries::truncated(int order) const {
  TruncSeries s(nvars_, order);
  for (const auto& [a, b, c] : terms()) s.set(a, b, c);
  return s;
}

TruncSeries TruncSeries::inverse() const {
  const Cyclotomic& c0 = coeff(0, 0);
  if (c0.is_zero()) throw std::domain_error("series with zero constant term is not invertible");
  Cyclotomic inv0 = c0.inverse();
  // 1/(c0(1 + y)) = inv0·Σ (-y)^n with y = self/c0 - 1.
  TruncSeries y = *this * inv0;
  y.set(0, 0, Cyclotomic());
  TruncSeries neg_y = -y;
  TruncSeries acc = constant(nvars_, order_, Cyclotomic(1));
  for (int n = 0; n < order_; ++n) acc = constant(nvars_, order_, Cyclotomic(1)) + neg_y * acc;
  return acc * inv0;
}

TruncSeries TruncSeries::rescaled(const Rational& c) const {
  TruncSeries s(nvars_, order_);
  Rational pw = 1;
  for (int d = 0; d <= order_; ++d, pw *= c)
    for (int b = 0; b <= (nvars_ == 1 ? 0 : d); ++b) s.set(d - b, b, coeff(d - b, b) * pw);
  return s;
}

TruncSeries TruncSeries::compose(const TruncSeries& inner) const {
  if (nvars_ != 1) throw std::invalid_argument("composition needs a univariate outer series");
  if (!inner.coeff(0, 0).is_zero()) throw std::invalid_argument("inner series must have zero constant term");
  const int ord = std::min(order_, inner.order_);
  TruncSeries in = inner.truncated(ord);
  TruncSeries acc(inner.nvars_, ord);
  for (int j = ord; j >= 0; --j) {
    acc *= in;
    acc.add(0, 0, coeff(j));
  }
  return acc;
}

TruncSeries TruncSeries::lift(int which) const {
  if (nvars_ != 1) throw std::invalid_argument("lift needs a univariate series");
  TruncSeries s(2, order_);
  for (int a = 0; a <= order_; ++a) s.set(which == 0 ? a : 0, which == 0 ? 0 : a, coeff(a));
  return s;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries s = *this;
  for (auto& c : s.c_) c = -c;
  return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  require_compatible(o);
  if (o.order_ < order_) *this = truncated(o.order_);
  for (const auto& [a, b, c] : o.terms()) add(a, b, c);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) { return *this += -o; }

TruncSeries& TruncSeries::operator*=(const TruncSeries& o) {
  require_compatible(o);
  const int ord = std::min(order_, o.order_);
  TruncSeries out(nvars_, ord);
  auto lhs = terms(), rhs = o.terms();
  for (const auto& [a, b, c] : lhs)
    for (const auto& [a2, b2, c2] : rhs)
      if (a + b + a2 + b2 <= ord) out.add(a + a2, b + b2, c * c2);
  *this = std::move(out);
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Cyclotomic& k) {
  for (auto& c : c_) c *= k;
  return *this;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.c_ == b.c_;
}

std::string TruncSeries::to_string(const std::string& x, const std::string& y) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, b, c] : terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (a > 0) os << "*" << x << "^" << a;
    if (b > 0) os << "*" << y << "^" << b;
  }
  if (first) os << "0";
  os << " + O(" << order_ + 1 << ")";
  return os.str();
}

namespace {

constexpr int kBernoulliTable = 128;

const std::vector<Rational>& bernoulli_table() {
  static const std::vector<Rational> table = [] {
    std::vector<Rational> b(kBernoulliTable + 1);
    b[0] = 1;
    for (int m = 1; m <= kBernoulliTable; ++m) {
      Rational s = 0;
      for (int k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * b[k];
      b[m] = -s / (m + 1);
    }
    return b;
  }();
  return table;
}

}  // namespace

Rational bernoulli_number(int n) {
  if (n < 0) throw std::invalid_argument("negative Bernoulli index");
  if (n > kBernoulliTable) throw std::out_of_range("Bernoulli index beyond table");
  return bernoulli_table()[n];
}

RationalPolynomial bernoulli_polynomial(int n) {
  std::vector<Rational> c(n + 1);
  for (int k = 0; k <= n; ++k) c[n - k] = Rational(binomial(n, k)) * bernoulli_number(k);
  return RationalPolynomial(std::move(c));
}

Rational delta_bernoulli(int n, const Rational& q) {
  if (n < 1) throw std::invalid_argument("delta_bernoulli needs n >= 1");
  // B_n(q) - B_n(0) = Σ_{k<n} C(n,k) B_k q^{n-k}.
  Rational s = 0, pw = q;
  for (int k = n - 1; k >= 0; --k, pw *= q) s += Rational(binomial(n, k)) * bernoulli_number(k) * pw;
  return s / Rational(factorial(static_cast<unsigned>(n)));
}

TruncSeries frk_series(int r, int k, int order) {
  if (r < 1 || k < 0 || k >= r) throw std::invalid_argument("frk_series needs 0 <= k < r");
  TruncSeries s(1, order);
  const Rational q = make_rational(k, r);
  for (int j = 0; j <= order; ++j) s.set(j, 0, delta_bernoulli(j + 1, q));
  return s;
}

namespace {

// 1 + x + ... + x^{k-1} in u = x - 1.
TruncSeries geometric_sum(int k, int order) {
  TruncSeries s(1, order);
  // Σ_{l<k} (1+u)^l = Σ_j C(k, j+1) u^j.
  for (int j = 0; j <= order; ++j) s.set(j, 0, Rational(binomial(k, j + 1)));
  return s;
}

}  // namespace

TruncSeries frk_at_one_series(int r, int k, int order) {
  if (r < 1 || k < 0 || k > r) throw std::invalid_argument("frk_at_one_series needs 0 <= k <= r");
  return geometric_sum(k, order) * geometric_sum(r, order).inverse();
}

TruncSeries f_r_at_one_series(int r, int order) {
  if (r < 1) throw std::invalid_argument("f_r_at_one_series needs r >= 1");
  // (H_r(x) - r) / (u·H_r(x)); H_r(x) - r has zero constant term, so divide by u first.
  TruncSeries h = geometric_sum(r, order + 1);
  TruncSeries num(1, order);
  for (int j = 0; j <= order; ++j) num.set(j, 0, h.coeff(j + 1));
  return num * h.truncated(order).inverse();
}

TruncSeries divide_by_diagonal(const TruncSeries& numerator, int order) {
  if (numerator.nvars() != 2) throw std::invalid_argument("diagonal division needs a bivariate series");
  if (numerator.order() < order + 1) throw std::invalid_argument("numerator known to too low an order");
  if (!numerator.coeff(0, 0).is_zero()) throw std::domain_error("numerator not divisible by x+x- - 1");
  TruncSeries q(2, order);
  for (int d = 0; d <= order; ++d) {
    // Homogeneous degree d+1: N = (u₊ + u₋)·Q_d + u₊u₋·Q_{d-1}.
    std::vector<Cyclotomic> m(d + 2);
    for (int i = 0; i <= d + 1; ++i) {
      m[i] = numerator.coeff(i, d + 1 - i);
      if (d >= 1 && i >= 1 && i <= d) m[i] -= q.coeff(i - 1, d - i);
    }
    Cyclotomic prev;
    for (int i = 0; i <= d; ++i) {
      Cyclotomic qi = m[i] - prev;
      q.set(i, d - i, qi);
      prev = qi;
    }
    if (prev != m[d + 1]) throw std::domain_error("numerator not divisible by x+x- - 1");
  }
  return q;
}

TruncSeries iif_series(int r, int k, int order) {
  if (r < 2 || k < 0 || k >= r) throw std::invalid_argument("iif_series needs r >= 2 and 0 <= k < r");
  const int n = order + 1;
  TruncSeries num = frk_at_one_series(r, k, n).lift(0) + frk_at_one_series(r, r - k, n).lift(1);
  num.add(0, 0, Cyclotomic(-1));
  return divide_by_diagonal(num, order);
}

TruncSeries f_r_eval_at_root(int r, int l, int order) {
  if (r < 2 || l < 1 || l >= r) throw std::invalid_argument("f_r_eval_at_root needs r >= 2 and 1 <= l < r");
  TruncSeries s(1, order);
  for (int k = 1; k < r; ++k) s += frk_at_one_series(r, k, order) * Cyclotomic::e(static_cast<long>(k) * l, r);
  return s;
}

TruncSeries exp_series(int order, const Rational& scale) {
  TruncSeries s(1, order);
  Rational pw = 1;
  for (int j = 0; j <= order; ++j, pw *= scale) s.set(j, 0, Rational(pw / Rational(factorial(j))));
  return s;
}

TruncSeries log_one_plus_series(int order) {
  TruncSeries s(1, order);
  for (int j = 1; j <= order; ++j) s.set(j, 0, make_rational(j % 2 == 1 ? 1 : -1, j));
  return s;
}

TruncSeries difference_quotient_exp_series(int order) {
  TruncSeries s(1, order);
  for (int j = 0; j <= order; ++j) s.set(j, 0, Rational(Rational(1) / Rational(factorial(j + 1))));
  return s;
}

}  // namespace hhodge
