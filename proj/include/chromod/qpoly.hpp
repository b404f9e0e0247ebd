// Exact arithmetic in Z[q] and in the rational function field Q(q).
// QPoly is a dense polynomial with arbitrary-precision integer coefficients;
// QRat is a canonical quotient of two QPoly. No floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace chromod {

// Polynomial in q. c[k] is the coefficient of q^k. Canonical form: the
// highest stored coefficient is nonzero; the zero polynomial stores nothing.
class QPoly {
public:
  QPoly() = default;
  QPoly(long n) : QPoly(mpz_class(n)) {}
  QPoly(const mpz_class& n);
  explicit QPoly(std::vector<mpz_class> coeffs);

  // coeff * q^k
  static QPoly monomial(const mpz_class& coeff, int k);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // coefficient of q^k, zero outside the stored range
  const mpz_class& coeff(int k) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& leading() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  bool operator==(const QPoly&) const = default;

  // multiply by q^k
  QPoly shifted(int k) const;
  // gcd of the coefficients, nonnegative; 0 for the zero polynomial
  mpz_class content() const;
  mpz_class eval_at_one() const;
  // q^degree * p(1/q); zero maps to zero
  QPoly reversed() const;
  std::string str() const;

private:
  std::vector<mpz_class> c_;
  void trim();
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0. Requires n >= 0.
QPoly q_int(int n);
// n!_q = [1]_q [2]_q ... [n]_q; 0!_q = 1. Requires n >= 0.
QPoly q_factorial(int n);
// Gaussian binomial; zero when k < 0 or k > n or n < 0.
QPoly q_binomial(int n, int k);

// Primitive gcd with positive leading coefficient; poly_gcd(0,0) = 0.
QPoly poly_gcd(QPoly a, QPoly b);
// Exact quotient; throws std::runtime_error if b does not divide a in Z[q].
QPoly exact_divide(const QPoly& a, const QPoly& b);

// Element of Q(q) in canonical form: numerator and denominator are coprime
// over Q[q] after clearing integer content, the integer content of the pair
// is reduced, and the denominator has positive leading coefficient.
class QRat {
public:
  QRat() : num_(), den_(1) {}
  QRat(long n) : num_(n), den_(1) {}
  QRat(QPoly p) : num_(std::move(p)), den_(1) {}
  QRat(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  QRat operator-() const;
  friend QRat operator+(const QRat& a, const QRat& b);
  friend QRat operator-(const QRat& a, const QRat& b);
  friend QRat operator*(const QRat& a, const QRat& b);
  friend QRat operator/(const QRat& a, const QRat& b);
  QRat& operator+=(const QRat& o) { return *this = *this + o; }
  QRat& operator-=(const QRat& o) { return *this = *this - o; }
  QRat& operator*=(const QRat& o) { return *this = *this * o; }
  bool operator==(const QRat&) const = default;

  // engaged (with the numerator) exactly when the canonical denominator is
  // the constant 1
  std::optional<QPoly> is_polynomial() const;
  // throws std::domain_error if the denominator vanishes at q = 1
  mpq_class eval_at_one() const;
  std::string str() const;

private:
  QPoly num_, den_;
  void canonicalize();
};

std::ostream& operator<<(std::ostream& os, const QRat& r);

}  // namespace chromod
