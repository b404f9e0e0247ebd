// Homogeneous symmetric functions of a fixed degree over Q(q), with exact
// conversions among the monomial, elementary, Schur, and power-sum bases.
// The monomial basis is the conversion hub.
#pragma once

#include "chromod/partition.hpp"

#include <map>
#include <string>

namespace chromod {

enum class Basis { m, e, s, p };

Basis basis_from_string(const std::string& s);  // throws on unknown name
std::string basis_name(Basis b);

// Coefficient map in a declared basis; zero coefficients are not stored, so
// equality of maps is equality of functions (within one basis).
class SymFunc {
public:
  SymFunc(int degree, Basis basis) : degree_(degree), basis_(basis) {}
  SymFunc(int degree, Basis basis, std::map<Partition, QRat> coeffs);

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const std::map<Partition, QRat>& coeffs() const { return coeffs_; }
  // zero for absent partitions; throws on weight mismatch
  QRat coefficient(const Partition& lambda) const;
  void add_term(const Partition& lambda, const QRat& c);

  SymFunc converted(Basis target) const;

  friend SymFunc operator+(const SymFunc& a, const SymFunc& b);
  friend SymFunc operator-(const SymFunc& a, const SymFunc& b);
  friend SymFunc operator*(const QRat& c, const SymFunc& f);
  bool operator==(const SymFunc&) const = default;
  std::string str() const;

private:
  int degree_;
  Basis basis_;
  std::map<Partition, QRat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const SymFunc& f);

// Monomial expansion of one basis element: e_lambda and p_lambda by iterated
// multiplication, s_lambda by semistandard tableau enumeration. Integer
// coefficients in weight(lambda) variables.
std::map<Partition, mpz_class> expand_in_monomials(Basis b, const Partition& lambda);

// Specialize x_1 = ... = x_k = 1, remaining variables 0, and q = 1.
mpq_class eval_ones(const SymFunc& f, int k);

}  // namespace chromod
