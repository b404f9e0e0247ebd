// Coefficient shapes: palindromicity, unimodality, log-concavity, and the
// synchronization property behind the closed forms for paths and lollipops.
#pragma once

#include "chromod/engine.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace chromod {

// coeff(k) == coeff(two_center - k) for every k, indices outside the
// support reading as zero; the center itself may be a half-integer
bool is_palindromic(const QPoly& p, int two_center);

// coefficients weakly rise, then weakly fall; the zero polynomial counts
bool is_unimodal(const QPoly& p);

// unimodal with a_k^2 >= a_{k-1} a_{k+1} for every k; for non-negative
// coefficients the inequality rules out internal zeros
bool is_log_concave(const QPoly& p);

// a_k b_k >= a_{k+1} b_{k-1} and a_k b_k >= a_{k-1} b_{k+1} for every k.
// Only defined for log-concave inputs; throws std::invalid_argument
// otherwise.  Symmetric in its arguments.
bool are_synchronized(const QPoly& a, const QPoly& b);

// the path 1 - 2 - ... - n, as h = (2, 3, ..., n, n)
Hess path_hess(int n);
// a complete graph on m vertices with a path of n extra vertices attached:
// h = (2, 3, ..., n + 1, n + m, ..., n + m), requires m > n >= 0
Hess lollipop_hess(int n, int m);

// Coefficient of e_lambda in csf_e of the path on |lambda| vertices:
// q^(len-1) times the sum, over the distinct orderings of lambda, of
// [last part] prod_{earlier parts p} [p - 1].
QPoly path_coefficient(const Partition& lambda);
// Coefficient of e_lambda in csf_e(lollipop_hess(n, m)); lambda must be a
// partition of n + m.  [n+m] (m-1)!_q when lambda_1 = n + m, zero when
// lambda_1 < m, and otherwise (m-1)!_q [lambda_1 - 1] times the path sum
// over the remaining parts, shifted by q^(len-1).
QPoly lollipop_coefficient(int n, int m, const Partition& lambda);

struct CoefficientShape {
  Partition lambda;
  bool palindromic = false;
  bool unimodal = false;
  bool log_concave = false;
  bool operator==(const CoefficientShape&) const = default;
};

// Shape flags for every coefficient of csf_e(h) written in the given basis.
// A coefficient is tested as a polynomial when it is one, otherwise as its
// numerator over a constant denominator (canonically positive, so the flags
// are unaffected); any other coefficient is an error.  two_center is twice
// the common palindromic center, the total area of h.  failures holds one
// (lambda, property) pair per failed check, in coefficient order.
struct ShapeReport {
  Hess h;
  Basis basis = Basis::e;
  int two_center = 0;
  std::vector<CoefficientShape> coefficients;
  std::vector<std::pair<Partition, std::string>> failures;
};

ShapeReport shape_report(const Hess& h, Basis basis, Engine& engine);
ShapeReport shape_report(const Hess& h, Basis basis);  // Engine::shared()

// Reports for every Hessenberg function of size n, in enumeration order.
// sink, when set, sees each report once, in that same order, after the scan
// finishes.  Workers share one memo, and the results do not depend on the
// thread count.  Guard: 1 <= n <= 12.
std::vector<ShapeReport> scan_shapes(
    int n, Basis basis, int threads = 1,
    const std::function<void(const ShapeReport&)>& sink = nullptr);

}  // namespace chromod
