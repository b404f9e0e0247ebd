#include "chromod/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>

namespace chromod {

bool is_palindromic(const QPoly& p, int two_center) {
  const int top = std::max(p.degree(), two_center);
  for (int k = 0; k <= top; ++k)
    if (p.coeff(k) != p.coeff(two_center - k)) return false;
  return true;
}

bool is_unimodal(const QPoly& p) {
  const auto& c = p.coeffs();
  size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  return i + 1 >= c.size();
}

bool is_log_concave(const QPoly& p) {
  if (!is_unimodal(p)) return false;
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeff(k) * p.coeff(k) < p.coeff(k - 1) * p.coeff(k + 1))
      return false;
  return true;
}

bool are_synchronized(const QPoly& a, const QPoly& b) {
  if (!is_log_concave(a) || !is_log_concave(b))
    throw std::invalid_argument(
        "are_synchronized: both inputs must be log-concave");
  const int top = std::max(a.degree(), b.degree()) + 1;
  for (int k = 0; k <= top; ++k) {
    const mpz_class ab = a.coeff(k) * b.coeff(k);
    if (ab < a.coeff(k + 1) * b.coeff(k - 1)) return false;
    if (ab < a.coeff(k - 1) * b.coeff(k + 1)) return false;
  }
  return true;
}

Hess path_hess(int n) {
  if (n < 1) throw std::invalid_argument("path_hess: need n >= 1");
  std::vector<int> v(n);
  for (int i = 1; i < n; ++i) v[i - 1] = i + 1;
  v[n - 1] = n;
  return Hess(std::move(v));
}

Hess lollipop_hess(int n, int m) {
  if (n < 0 || m <= n)
    throw std::invalid_argument("lollipop_hess: need m > n >= 0");
  std::vector<int> v(n + m);
  for (int i = 1; i <= n; ++i) v[i - 1] = i + 1;
  for (int i = n + 1; i <= n + m; ++i) v[i - 1] = n + m;
  return Hess(std::move(v));
}

namespace {

// sum over the distinct orderings of lambda of [last] prod [earlier - 1],
// grouped by the value placed last: one term per distinct part value,
// weighted by the orderings of the remaining multiset
QPoly last_part_sum(const Partition& lambda) {
  const int len = lambda.length();
  QPoly sum;
  for (int i = 1; i <= len; ++i) {
    if (i > 1 && lambda.part(i) == lambda.part(i - 1)) continue;
    QPoly term = q_int(lambda.part(i));
    std::vector<int> rest;
    rest.reserve(len - 1);
    for (int j = 1; j <= len; ++j)
      if (j != i) {
        term = term * q_int(lambda.part(j) - 1);
        rest.push_back(lambda.part(j));
      }
    sum += QPoly(Partition(std::move(rest)).arrangements(len - 1)) * term;
  }
  return sum;
}

}  // namespace

QPoly path_coefficient(const Partition& lambda) {
  const int len = lambda.length();
  if (len == 0) return QPoly();
  return QPoly::monomial(1, len - 1) * last_part_sum(lambda);
}

QPoly lollipop_coefficient(int n, int m, const Partition& lambda) {
  if (n < 0 || m <= n)
    throw std::invalid_argument("lollipop_coefficient: need m > n >= 0");
  if (lambda.weight() != n + m)
    throw std::invalid_argument(
        "lollipop_coefficient: lambda must be a partition of n + m");
  if (lambda.part(1) == n + m) return q_int(n + m) * q_factorial(m - 1);
  if (lambda.part(1) < m) return QPoly();
  const int len = lambda.length();
  std::vector<int> tail;
  tail.reserve(len - 1);
  for (int i = 2; i <= len; ++i) tail.push_back(lambda.part(i));
  return QPoly::monomial(1, len - 1) * q_factorial(m - 1) *
         q_int(lambda.part(1) - 1) * last_part_sum(Partition(std::move(tail)));
}

namespace {

// the polynomial whose shape stands for the coefficient; a constant
// denominator is a positive scalar and cannot change any of the flags
QPoly shape_polynomial(const Partition& lambda, const QRat& c) {
  if (auto p = c.is_polynomial()) return *p;
  if (c.den().degree() == 0) return c.num();
  throw std::invalid_argument("shape_report: coefficient of " + lambda.str() +
                              " has a non-constant denominator");
}

}  // namespace

ShapeReport shape_report(const Hess& h, Basis basis, Engine& engine) {
  const SymFunc f = csf_e(h, engine).converted(basis);
  const std::vector<int> area = h.area_sequence();
  ShapeReport rep{h, basis, std::accumulate(area.begin(), area.end(), 0),
                  {}, {}};
  for (const auto& [lambda, c] : f.coeffs()) {
    const QPoly p = shape_polynomial(lambda, c);
    CoefficientShape s{lambda, is_palindromic(p, rep.two_center),
                       is_unimodal(p), is_log_concave(p)};
    if (!s.palindromic) rep.failures.emplace_back(lambda, "palindromic");
    if (!s.unimodal) rep.failures.emplace_back(lambda, "unimodal");
    if (!s.log_concave) rep.failures.emplace_back(lambda, "log-concave");
    rep.coefficients.push_back(std::move(s));
  }
  return rep;
}

ShapeReport shape_report(const Hess& h, Basis basis) {
  return shape_report(h, basis, Engine::shared());
}

std::vector<ShapeReport> scan_shapes(
    int n, Basis basis, int threads,
    const std::function<void(const ShapeReport&)>& sink) {
  if (n < 1 || n > 12)
    throw std::invalid_argument("scan_shapes: size must lie in [1, 12]");
  const std::vector<Hess> all = enumerate_hess(n);
  threads = std::clamp<int>(threads, 1, static_cast<int>(all.size()));
  std::vector<std::optional<ShapeReport>> slots(all.size());
  std::atomic<size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  const auto work = [&] {
    constexpr size_t block = 32;
    for (;;) {
      const size_t lo = cursor.fetch_add(block);
      if (lo >= slots.size()) return;
      const size_t hi = std::min(slots.size(), lo + block);
      try {
        for (size_t i = lo; i < hi; ++i)
          slots[i] = shape_report(all[i], basis);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<ShapeReport> out;
  out.reserve(slots.size());
  for (auto& slot : slots) {
    if (sink) sink(*slot);
    out.push_back(std::move(*slot));
  }
  return out;
}

}  // namespace chromod
