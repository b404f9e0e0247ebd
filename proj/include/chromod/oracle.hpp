// Ground truth independent of the reduction engine: the chromatic
// quasisymmetric function by brute-force enumeration of proper colorings
// with the ascent statistic, and the q-chromatic polynomial together with
// the homomorphism alpha sending e_n to prod_{j<n}(x - [j]_q) / n!_q.
#pragma once

#include "chromod/dyck.hpp"
#include "chromod/symfunc.hpp"

namespace chromod {

// polynomial in x over Q(q), finitely supported coefficient map
class XPoly {
public:
  XPoly() = default;
  explicit XPoly(const QRat& constant);
  static XPoly variable();

  const std::map<int, QRat>& coeffs() const { return coeffs_; }
  QRat coefficient(int d) const;
  void add_term(int d, const QRat& c);
  int degree() const;  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }

  friend XPoly operator+(const XPoly& a, const XPoly& b);
  friend XPoly operator-(const XPoly& a, const XPoly& b);
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  friend XPoly operator*(const QRat& c, const XPoly& f);
  bool operator==(const XPoly&) const = default;
  std::string str() const;

private:
  std::map<int, QRat> coeffs_;  // zero coefficients are not stored
};

std::ostream& operator<<(std::ostream& os, const XPoly& f);

// m-basis expansion of sum_kappa q^{asc(kappa)} x_kappa over proper colorings
// of the indifference graph of h, edges {i,j} for i < j <= h(i).  Colors
// default to n; more colors must give the same coefficients.  The n <= 8
// guard can be lifted with unsafe.
SymFunc csf_oracle(const Hess& h, int colors = 0, bool unsafe = false);

// prod_i (x - [h(i)-i]_q)
XPoly chromatic_poly_q(const Hess& h);

// image of an e-basis function under alpha, extended linearly and
// multiplicatively over partitions
XPoly alpha_apply(const SymFunc& f);

}  // namespace chromod
