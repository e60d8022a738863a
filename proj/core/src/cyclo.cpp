#include "hhodge/cyclo.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hhodge {
namespace {

struct PrimePower {
  long p;
  int a;
  long pa;
};

std::vector<PrimePower> factor(long n) {
  std::vector<PrimePower> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    PrimePower f{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++f.a;
      f.pa *= p;
    }
    out.push_back(f);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

bool all_zero(const std::vector<Rational>& c) {
  for (const auto& x : c)
    if (sgn(x) != 0) return false;
  return true;
}

// N = 2·(odd): e(i/N) = e((i/2)/N') for even i and -e(((i+N')/2)/N') for odd i.
void fold_twice_odd(long& n, std::vector<Rational>& c) {
  if (n % 4 != 2) return;
  long h = n / 2;
  std::vector<Rational> out(h);
  for (long i = 0; i < n; ++i) {
    if (sgn(c[i]) == 0) continue;
    if (i % 2 == 0)
      out[i / 2] += c[i];
    else
      out[mod((i + h) / 2, h)] -= c[i];
  }
  n = h;
  c = std::move(out);
}

// Rewrites every exponent into B_n. Each prime only moves its own digit, so one pass suffices.
void reduce_to_basis(long n, std::vector<Rational>& c) {
  for (const auto& f : factor(n)) {
    long step = n / f.p;
    long top = f.pa / f.p;
    for (long i = 0; i < n; ++i) {
      if (sgn(c[i]) == 0) continue;
      long digit = (i % f.pa) / top;
      bool bad = (f.p == 2) ? digit != 0 : digit == 0;
      if (!bad) continue;
      Rational v = c[i];
      c[i] = 0;
      if (f.p == 2) {
        c[mod(i + step, n)] -= v;
      } else {
        for (long k = 1; k < f.p; ++k) c[mod(i + k * step, n)] -= v;
      }
    }
  }
}

// One descent to a maximal cyclotomic subfield, if the value lies there.
bool descend(long& n, std::vector<Rational>& c) {
  for (const auto& f : factor(n)) {
    const long p = f.p;
    if (f.a >= 2) {
      bool divisible = true;
      for (long i = 0; i < n && divisible; ++i)
        if (sgn(c[i]) != 0 && i % p != 0) divisible = false;
      if (!divisible) continue;
      long m = n / p;
      std::vector<Rational> out(m);
      for (long i = 0; i < n; i += p) out[i / p] = c[i];
      n = m;
      c = std::move(out);
      return true;
    }
    if (p == 2) continue;
    // p || n, p odd: Q(ζ_n) = Q(ζ_m) ⊗ Q(ζ_p). Within each residue class mod m the
    // p-1 basis coefficients must agree.
    const long m = n / p;
    bool constant = true;
    for (long rho = 0; rho < m && constant; ++rho) {
      const Rational* first = nullptr;
      for (long i = rho; i < n; i += m) {
        if (i % p == 0) continue;
        if (first == nullptr)
          first = &c[i];
        else if (*first != c[i]) {
          constant = false;
          break;
        }
      }
    }
    if (!constant) continue;
    std::vector<Rational> out(m);
    for (long rho = 0; rho < m; ++rho) {
      long i0 = rho;
      while (i0 % p != 0) i0 += m;
      long rep = (rho % p == 0) ? rho + m : rho;
      if (rep % p == 0) rep += m;
      out[(i0 / p) % m] -= c[mod(rep, n)];
    }
    n = m;
    c = std::move(out);
    return true;
  }
  return false;
}

void normalize(long& n, std::vector<Rational>& c) {
  fold_twice_odd(n, c);
  reduce_to_basis(n, c);
  if (all_zero(c)) {
    n = 1;
    c.assign(1, Rational(0));
    return;
  }
  while (n > 1 && descend(n, c)) {
    fold_twice_odd(n, c);
    reduce_to_basis(n, c);
  }
}

}  // namespace

Cyclotomic::Cyclotomic(const Rational& q) {
  if (sgn(q) != 0) t_.emplace_back(0, q);
}

Cyclotomic::Cyclotomic(long v) : Cyclotomic(Rational(v)) {}

Cyclotomic::Cyclotomic(long n, std::vector<Rational> dense) {
  normalize(n, dense);
  n_ = n;
  for (long i = 0; i < n; ++i)
    if (sgn(dense[i]) != 0) t_.emplace_back(i, std::move(dense[i]));
}

std::vector<Rational> Cyclotomic::dense(long n) const {
  std::vector<Rational> c(n);
  long scale = n / n_;
  for (const auto& [i, v] : t_) c[i * scale] += v;
  return c;
}

Cyclotomic Cyclotomic::root_of_unity(const Rational& q) {
  Rational f = frac_part(q);
  long n = to_int64(f.get_den());
  std::vector<Rational> c(n);
  c[to_int64(f.get_num())] = 1;
  return Cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::e(long num, long den) { return root_of_unity(make_rational(num, den)); }

Cyclotomic Cyclotomic::from_terms(const std::vector<std::pair<Rational, Rational>>& terms) {
  long n = 1;
  for (const auto& [q, c] : terms) n = lcm_long(n, to_int64(frac_part(q).get_den()));
  std::vector<Rational> dense(n);
  for (const auto& [q, c] : terms) {
    Rational f = frac_part(q) * n;
    f.canonicalize();
    dense[to_int64(f.get_num())] += c;
  }
  return Cyclotomic(n, std::move(dense));
}

std::vector<std::pair<Rational, Rational>> Cyclotomic::terms() const {
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(t_.size());
  for (const auto& [i, v] : t_) out.emplace_back(make_rational(i, n_), v);
  return out;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  if (n_ != 1) return std::nullopt;
  return t_.empty() ? Rational(0) : t_.front().second;
}

Cyclotomic Cyclotomic::galois(long a) const {
  if (gcd_long(a, n_) != 1) throw std::invalid_argument("Galois exponent not coprime to conductor");
  if (n_ == 1) return *this;
  std::vector<Rational> c(n_);
  for (const auto& [i, v] : t_) c[mod(a * i, n_)] += v;
  return Cyclotomic(n_, std::move(c));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic");
  if (n_ == 1) return Cyclotomic(Rational(1) / t_.front().second);
  // x^{-1} = (Π_{σ≠1} σx) / N(x) with the norm taken over Gal(Q(ζ_n)/Q).
  Cyclotomic others(Rational(1));
  for (long a = 2; a < n_; ++a)
    if (gcd_long(a, n_) == 1) others *= galois(a);
  auto norm = (*this * others).as_rational();
  if (!norm) throw std::logic_error("cyclotomic norm is not rational");
  return others * (Rational(1) / *norm);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& [i, v] : r.t_) v = -v;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.is_zero()) return *this;
  if (n_ == 1 && o.n_ == 1) {
    Rational s = (t_.empty() ? Rational(0) : t_.front().second) + o.t_.front().second;
    *this = Cyclotomic(s);
    return *this;
  }
  long n = lcm_long(n_, o.n_);
  std::vector<Rational> c = dense(n);
  long scale = n / o.n_;
  for (const auto& [i, v] : o.t_) c[i * scale] += v;
  *this = Cyclotomic(n, std::move(c));
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Cyclotomic();
  if (o.n_ == 1) return *this *= o.t_.front().second;
  if (n_ == 1) {
    Rational q = t_.front().second;
    *this = o;
    return *this *= q;
  }
  long n = lcm_long(n_, o.n_);
  long sa = n / n_, sb = n / o.n_;
  std::vector<Rational> c(n);
  for (const auto& [i, v] : t_)
    for (const auto& [j, w] : o.t_) c[mod(i * sa + j * sb, n)] += v * w;
  *this = Cyclotomic(n, std::move(c));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& q) {
  if (sgn(q) == 0) {
    *this = Cyclotomic();
    return *this;
  }
  for (auto& [i, v] : t_) v *= q;
  return *this;
}

std::string Cyclotomic::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [q, c] : terms()) {
    if (!first) os << " + ";
    first = false;
    if (sgn(q) == 0)
      os << c.get_str();
    else
      os << c.get_str() << "*e(" << q.get_str() << ")";
  }
  return os.str();
}

std::complex<double> Cyclotomic::approx() const {
  std::complex<double> z = 0;
  for (const auto& [i, v] : t_) {
    double ang = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_);
    z += v.get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return z;
}

Cyclotomic cyc_arith(CycOp op, const Cyclotomic& a, const std::optional<Cyclotomic>& b) {
  const bool binary = op == CycOp::add || op == CycOp::mul;
  if (binary && !b) throw std::invalid_argument("binary cyclotomic op needs two operands");
  if (!binary && b) throw std::invalid_argument("unary cyclotomic op takes one operand");
  switch (op) {
    case CycOp::add:
      return a + *b;
    case CycOp::mul:
      return a * *b;
    case CycOp::negate:
      return -a;
    case CycOp::conjugate:
      return a.conjugate();
  }
  throw std::invalid_argument("unknown cyclotomic op");
}

std::optional<Rational> cyc_as_rational(const Cyclotomic& a) { return a.as_rational(); }

}  // namespace hhodge
