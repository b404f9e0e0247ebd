#include "chromod/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace chromod {

Basis basis_from_string(const std::string& s) {
  if (s == "m") return Basis::m;
  if (s == "e") return Basis::e;
  if (s == "s") return Basis::s;
  if (s == "p") return Basis::p;
  throw std::invalid_argument("unknown basis: " + s);
}

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::e: return "e";
    case Basis::s: return "s";
    case Basis::p: return "p";
  }
  throw std::logic_error("bad basis tag");
}

SymFunc::SymFunc(int degree, Basis basis, std::map<Partition, QRat> coeffs)
    : degree_(degree), basis_(basis), coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->first.weight() != degree_)
      throw std::invalid_argument("SymFunc: partition " + it->first.str() +
                                  " has wrong weight for degree " +
                                  std::to_string(degree_));
    if (it->second.is_zero())
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

QRat SymFunc::coefficient(const Partition& lambda) const {
  if (lambda.weight() != degree_)
    throw std::invalid_argument("SymFunc::coefficient: weight mismatch for " +
                                lambda.str());
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? QRat() : it->second;
}

void SymFunc::add_term(const Partition& lambda, const QRat& c) {
  if (lambda.weight() != degree_)
    throw std::invalid_argument("SymFunc::add_term: weight mismatch for " +
                                lambda.str());
  auto it = coeffs_.find(lambda);
  if (it == coeffs_.end()) {
    if (!c.is_zero()) coeffs_.emplace(lambda, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
  if (a.degree_ != b.degree_ || a.basis_ != b.basis_)
    throw std::invalid_argument("SymFunc addition: degree or basis mismatch");
  SymFunc r = a;
  for (const auto& [lam, c] : b.coeffs_) r.add_term(lam, c);
  return r;
}

SymFunc operator-(const SymFunc& a, const SymFunc& b) {
  if (a.degree_ != b.degree_ || a.basis_ != b.basis_)
    throw std::invalid_argument("SymFunc subtraction: degree or basis mismatch");
  SymFunc r = a;
  for (const auto& [lam, c] : b.coeffs_) r.add_term(lam, -c);
  return r;
}

SymFunc operator*(const QRat& c, const SymFunc& f) {
  SymFunc r(f.degree_, f.basis_);
  if (c.is_zero()) return r;
  for (const auto& [lam, x] : f.coeffs_) r.coeffs_.emplace(lam, c * x);
  return r;
}

std::string SymFunc::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lam, c] : coeffs_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*" << basis_name(basis_) << lam.str();
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SymFunc& f) { return os << f.str(); }

namespace {

// all k-subsets of {0,...,slots-1}
const std::vector<std::vector<int>>& subsets_of(int slots, int k) {
  static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(slots, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int t = next; t < slots; ++t) {
      if (slots - t < k - static_cast<int>(cur.size())) break;
      cur.push_back(t);
      rec(t + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return cache.emplace(key, std::move(out)).first->second;
}

Partition sort_drop(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<int>());
  while (!v.empty() && v.back() == 0) v.pop_back();
  return Partition(std::move(v));
}

// multiply an m-basis map by e_k (positive == true) or by p_k (false)
std::map<Partition, mpz_class> multiply_step(const std::map<Partition, mpz_class>& F,
                                             int k, bool elementary, int new_weight) {
  std::map<Partition, mpz_class> out;
  for (const Partition& nu : partitions_of(new_weight)) {
    const auto& alpha = nu.parts();
    const int len = nu.length();
    mpz_class total(0);
    if (elementary) {
      if (k <= len) {
        for (const auto& S : subsets_of(len, k)) {
          std::vector<int> beta(alpha);
          bool ok = true;
          for (int t : S) {
            if (--beta[t] < 0) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          auto it = F.find(sort_drop(std::move(beta)));
          if (it != F.end()) total += it->second;
        }
      }
    } else {
      for (int t = 0; t < len; ++t) {
        if (alpha[t] < k) continue;
        std::vector<int> beta(alpha);
        beta[t] -= k;
        auto it = F.find(sort_drop(std::move(beta)));
        if (it != F.end()) total += it->second;
      }
    }
    if (total != 0) out.emplace(nu, total);
  }
  return out;
}

// semistandard tableaux of shape lambda with entries <= nvars, bucketed by
// sorted content
std::map<Partition, mpz_class> schur_to_m(const Partition& lambda, int nvars) {
  std::map<std::vector<int>, mpz_class> buckets;
  const auto& rows = lambda.parts();
  const int nrows = lambda.length();
  std::vector<std::vector<int>> fill(nrows);
  for (int r = 0; r < nrows; ++r) fill[r].assign(rows[r], 0);
  std::vector<int> content(nvars + 1, 0);
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == nrows) {
      std::vector<int> key(content.begin() + 1, content.end());
      std::sort(key.begin(), key.end(), std::greater<int>());
      while (!key.empty() && key.back() == 0) key.pop_back();
      buckets[key] += 1;
      return;
    }
    int nr = r, nc = c + 1;
    if (nc == rows[r]) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, fill[r][c - 1]);
    if (r > 0) lo = std::max(lo, fill[r - 1][c] + 1);
    for (int v = lo; v <= nvars; ++v) {
      fill[r][c] = v;
      ++content[v];
      rec(nr, nc);
      --content[v];
    }
  };
  if (nrows == 0) return {{Partition(), mpz_class(1)}};
  rec(0, 0);
  std::map<Partition, mpz_class> out;
  for (auto& [key, count] : buckets) {
    Partition mu{std::vector<int>(key)};
    mpz_class arr = mu.arrangements(nvars);
    mpz_class coeff;
    if (!mpz_divisible_p(count.get_mpz_t(), arr.get_mpz_t()))
      throw std::runtime_error("schur_to_m: tableau bucket not divisible by orbit size");
    mpz_divexact(coeff.get_mpz_t(), count.get_mpz_t(), arr.get_mpz_t());
    out.emplace(std::move(mu), std::move(coeff));
  }
  return out;
}

}  // namespace

std::map<Partition, mpz_class> expand_in_monomials(Basis b, const Partition& lambda) {
  if (b == Basis::m) return {{lambda, mpz_class(1)}};
  if (b == Basis::s) return schur_to_m(lambda, std::max(lambda.weight(), 1));
  std::map<Partition, mpz_class> F{{Partition(), mpz_class(1)}};
  int w = 0;
  for (int part : lambda.parts()) {
    w += part;
    F = multiply_step(F, part, b == Basis::e, w);
  }
  return F;
}

namespace {

using Matrix = std::vector<std::vector<mpq_class>>;

// inverse of the transposed transition matrix basis -> m, i.e. the matrix
// taking a vector of m-coefficients to coefficients in `basis`
const Matrix& inverse_transition(int degree, Basis basis) {
  static std::map<std::pair<int, Basis>, Matrix> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(degree, basis);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<Partition> parts = partitions_of(degree);
  const int k = static_cast<int>(parts.size());
  std::map<Partition, int> index;
  for (int i = 0; i < k; ++i) index.emplace(parts[i], i);

  // A[mu][lambda] = coefficient of m_mu in basis_lambda
  Matrix a(k, std::vector<mpq_class>(k, mpq_class(0)));
  for (int col = 0; col < k; ++col)
    for (const auto& [mu, c] : expand_in_monomials(basis, parts[col]))
      a[index.at(mu)][col] = mpq_class(c);

  // Gauss-Jordan over Q
  Matrix inv(k, std::vector<mpq_class>(k, mpq_class(0)));
  for (int i = 0; i < k; ++i) inv[i][i] = 1;
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int r = col; r < k; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::runtime_error("inverse_transition: singular matrix");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    mpq_class d = a[col][col];
    for (int j = 0; j < k; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < k; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class f = a[r][col];
      for (int j = 0; j < k; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return cache.emplace(key, std::move(inv)).first->second;
}

QRat scale(const QRat& x, const mpq_class& c) {
  return QRat(x.num() * QPoly(mpz_class(c.get_num())),
              x.den() * QPoly(mpz_class(c.get_den())));
}

}  // namespace

SymFunc SymFunc::converted(Basis target) const {
  if (target == basis_) return *this;

  // source -> m
  SymFunc inm(degree_, Basis::m);
  if (basis_ == Basis::m) {
    inm = *this;
  } else {
    for (const auto& [lam, c] : coeffs_)
      for (const auto& [mu, k] : expand_in_monomials(basis_, lam))
        inm.add_term(mu, c * QRat(QPoly(k)));
  }
  if (target == Basis::m) return inm;

  // m -> target via the cached inverse transition matrix
  std::vector<Partition> parts = partitions_of(degree_);
  const Matrix& inv = inverse_transition(degree_, target);
  const int k = static_cast<int>(parts.size());
  std::vector<QRat> v(k);
  for (int i = 0; i < k; ++i) v[i] = inm.coefficient(parts[i]);
  SymFunc out(degree_, target);
  for (int i = 0; i < k; ++i) {
    QRat c;
    for (int j = 0; j < k; ++j) {
      if (inv[i][j] == 0 || v[j].is_zero()) continue;
      c += scale(v[j], inv[i][j]);
    }
    out.add_term(parts[i], c);
  }
  return out;
}

mpq_class eval_ones(const SymFunc& f, int k) {
  if (k < 0) throw std::invalid_argument("eval_ones: negative variable count");
  mpq_class total(0);
  for (const auto& [lam, c] : f.coeffs()) {
    mpq_class basis_value;
    switch (f.basis()) {
      case Basis::m:
        basis_value = mpq_class(lam.arrangements(k));
        break;
      case Basis::e: {
        mpz_class prod(1), binom;
        for (int part : lam.parts()) {
          mpz_bin_uiui(binom.get_mpz_t(), k, part);
          prod *= binom;
        }
        basis_value = mpq_class(prod);
        break;
      }
      case Basis::p: {
        mpz_class prod;
        mpz_ui_pow_ui(prod.get_mpz_t(), k, lam.length());
        basis_value = mpq_class(prod);
        break;
      }
      case Basis::s: {
        // product over cells of (k + j - i)/hook, 1-based cell (i,j)
        mpq_class prod(1);
        Partition t = lam.transposed();
        for (int i = 1; i <= lam.length(); ++i)
          for (int j = 1; j <= lam.part(i); ++j) {
            int hook = (lam.part(i) - j) + (t.part(j) - i) + 1;
            mpq_class cell(k + j - i, hook);
            cell.canonicalize();
            prod *= cell;
          }
        basis_value = prod;
        break;
      }
    }
    total += c.eval_at_one() * basis_value;
  }
  return total;
}

}  // namespace chromod
