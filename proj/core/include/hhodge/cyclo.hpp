#pragma once

#include "hhodge/rational.hpp"

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hhodge {

// An element of Q(ζ_∞), stored as Σ c_i·e(i/N) over a basis of Q(ζ_N).
//
// Normal form: N is the smallest conductor whose field contains the value
// (never 2 mod 4), and the exponents i lie in the basis
//   B_N = { i : for each p^a || N, the top base-p digit of (i mod p^a)
//               is nonzero for odd p and zero for p = 2 }.
// Two equal values therefore have identical (N, terms).
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(const Rational& q);  // NOLINT: rationals embed implicitly
  Cyclotomic(long v);             // NOLINT

  // e(q) = exp(2πi·q); q is reduced mod 1.
  static Cyclotomic root_of_unity(const Rational& q);
  static Cyclotomic e(long num, long den);
  // Σ c·e(q) for arbitrary (q, c) pairs.
  static Cyclotomic from_terms(const std::vector<std::pair<Rational, Rational>>& terms);

  // (exponent in [0,1), nonzero coefficient), exponents ascending.
  std::vector<std::pair<Rational, Rational>> terms() const;
  long conductor() const { return n_; }
  std::size_t term_count() const { return t_.size(); }

  bool is_zero() const { return t_.empty(); }
  bool is_rational() const { return n_ == 1; }
  std::optional<Rational> as_rational() const;

  // Galois action e(q) -> e(a·q); requires gcd(a, conductor) = 1.
  Cyclotomic galois(long a) const;
  Cyclotomic conjugate() const { return galois(-1); }
  // Throws std::domain_error on zero.
  Cyclotomic inverse() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& q);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
  friend Cyclotomic operator*(const Rational& q, Cyclotomic a) { return a *= q; }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.n_ == b.n_ && a.t_ == b.t_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::string to_string() const;
  // Debug printing only.
  std::complex<double> approx() const;

 private:
  Cyclotomic(long n, std::vector<Rational> dense);
  std::vector<Rational> dense(long n) const;

  long n_ = 1;
  std::vector<std::pair<long, Rational>> t_;
};

enum class CycOp { add, mul, negate, conjugate };

// Throws std::invalid_argument when b is given for a unary op or missing for a binary one.
Cyclotomic cyc_arith(CycOp op, const Cyclotomic& a, const std::optional<Cyclotomic>& b = std::nullopt);
std::optional<Rational> cyc_as_rational(const Cyclotomic& a);

}  // namespace hhodge
