#include "chromod/qpoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace chromod {

QPoly::QPoly(const mpz_class& n) {
  if (n != 0) c_.push_back(n);
}

QPoly::QPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const mpz_class& coeff, int k) {
  QPoly p;
  if (coeff != 0) {
    p.c_.assign(k + 1, mpz_class(0));
    p.c_[k] = coeff;
  }
  return p;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& QPoly::coeff(int k) const {
  static const mpz_class zero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[k];
}

const mpz_class& QPoly::leading() const {
  if (c_.empty()) throw std::logic_error("QPoly::leading on zero polynomial");
  return c_.back();
}

QPoly QPoly::operator-() const {
  QPoly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), mpz_class(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), mpz_class(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(out));
}

QPoly QPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k < 0) throw std::logic_error("QPoly::shifted: negative shift");
  std::vector<mpz_class> out(c_.size() + k, mpz_class(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
  return QPoly(std::move(out));
}

mpz_class QPoly::content() const {
  mpz_class g(0);
  for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

mpz_class QPoly::eval_at_one() const {
  mpz_class s(0);
  for (const auto& x : c_) s += x;
  return s;
}

QPoly QPoly::reversed() const {
  std::vector<mpz_class> out(c_.rbegin(), c_.rend());
  return QPoly(std::move(out));
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    mpz_class a = c_[k];
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    mpz_class mag = abs(a);
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) {
      os << "q";
      if (k >= 2) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.str(); }

QPoly q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int: negative argument");
  std::vector<mpz_class> c(n, mpz_class(1));
  return QPoly(std::move(c));
}

QPoly q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
  QPoly r(1);
  for (int j = 2; j <= n; ++j) r = r * q_int(j);
  return r;
}

QPoly q_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return QPoly();
  // C(i,0) = 1; C(i,j) = C(i-1,j-1) + q^j C(i-1,j)
  std::vector<QPoly> row(k + 1);
  row[0] = QPoly(1);
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      QPoly upper = (j <= i - 1) ? row[j] : QPoly();
      row[j] = row[j - 1] + upper.shifted(j);
    }
  }
  return row[k];
}

namespace {

// divide every coefficient by d, which must divide exactly
QPoly divide_content(const QPoly& a, const mpz_class& d) {
  if (d == 0) throw std::logic_error("divide_content by zero");
  std::vector<mpz_class> out(a.coeffs());
  for (auto& x : out) {
    if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()))
      throw std::runtime_error("divide_content: not divisible");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  }
  return QPoly(std::move(out));
}

// strip content and make the leading coefficient positive
QPoly primitive(const QPoly& a) {
  if (a.is_zero()) return a;
  QPoly p = divide_content(a, a.content());
  if (p.leading() < 0) p = -p;
  return p;
}

}  // namespace

QPoly poly_gcd(QPoly a, QPoly b) {
  a = primitive(a);
  b = primitive(b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  // primitive pseudo-remainder sequence
  while (!b.is_zero()) {
    QPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      QPoly t = b.shifted(r.degree() - b.degree());
      r = r * QPoly(b.leading()) - t * QPoly(r.leading());
    }
    a = b;
    b = primitive(r);
  }
  return a;
}

QPoly exact_divide(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::runtime_error("exact_divide by zero");
  if (a.is_zero()) return QPoly();
  if (a.degree() < b.degree()) throw std::runtime_error("exact_divide: not divisible");
  std::vector<mpz_class> rem(a.coeffs());
  std::vector<mpz_class> quot(a.degree() - b.degree() + 1, mpz_class(0));
  const mpz_class& lb = b.leading();
  for (int d = a.degree() - b.degree(); d >= 0; --d) {
    mpz_class& lead = rem[d + b.degree()];
    if (lead == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), lb.get_mpz_t()))
      throw std::runtime_error("exact_divide: not divisible");
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), lead.get_mpz_t(), lb.get_mpz_t());
    quot[d] = c;
    for (int k = 0; k <= b.degree(); ++k) rem[d + k] -= c * b.coeff(k);
  }
  for (const auto& x : rem)
    if (x != 0) throw std::runtime_error("exact_divide: nonzero remainder");
  return QPoly(std::move(quot));
}

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

void QRat::canonicalize() {
  if (den_.is_zero()) throw std::invalid_argument("QRat: zero denominator");
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  mpz_class cn = num_.content();
  mpz_class cd = den_.content();
  QPoly pn = divide_content(num_, cn);
  QPoly pd = divide_content(den_, cd);
  QPoly g = poly_gcd(pn, pd);
  if (!(g.degree() == 0 && g.leading() == 1)) {
    pn = exact_divide(pn, g);
    pd = exact_divide(pd, g);
  }
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  cn /= r;
  cd /= r;
  if (pd.leading() < 0) {
    pn = -pn;
    pd = -pd;
  }
  num_ = pn * QPoly(cn);
  den_ = pd * QPoly(cd);
}

QRat QRat::operator-() const {
  QRat r(*this);
  r.num_ = -r.num_;
  return r;
}

QRat operator+(const QRat& a, const QRat& b) {
  return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator-(const QRat& a, const QRat& b) {
  return QRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator*(const QRat& a, const QRat& b) {
  return QRat(a.num_ * b.num_, a.den_ * b.den_);
}

QRat operator/(const QRat& a, const QRat& b) {
  if (b.is_zero()) throw std::domain_error("QRat division by zero");
  return QRat(a.num_ * b.den_, a.den_ * b.num_);
}

std::optional<QPoly> QRat::is_polynomial() const {
  if (den_ == QPoly(1)) return num_;
  return std::nullopt;
}

mpq_class QRat::eval_at_one() const {
  mpz_class d = den_.eval_at_one();
  if (d == 0) throw std::domain_error("QRat::eval_at_one: denominator vanishes at 1");
  mpq_class r(num_.eval_at_one(), d);
  r.canonicalize();
  return r;
}

std::string QRat::str() const {
  if (den_ == QPoly(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const QRat& r) { return os << r.str(); }

}  // namespace chromod
