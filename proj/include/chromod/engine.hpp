// The reduction engine: three-term relations on Hessenberg functions, the
// step choosers for the non-aligned and aligned cases, and memoized
// expansion of any modular-law function into its values at products of
// complete paths.
#pragma once

#include "chromod/dyck.hpp"
#include "chromod/symfunc.hpp"

#include <map>
#include <optional>
#include <shared_mutex>
#include <vector>

namespace chromod {

// one application of the relation
// [b+1]_q f(h1) = [j-i]_q f(h2) + ([b+1]_q - [j-i]_q) f(h0)
struct Step {
  int i = 0;
  int j = 0;
  int b = 0;
  Hess h0;
  Hess h2;
  QRat coeff_h2;  // [j-i]_q / [b+1]_q
  QRat coeff_h0;  // 1 - coeff_h2
};

// f(h) = sum over lambda of terms[lambda] * f(k_lambda)
using Expansion = std::map<Partition, QRat>;

// conditions on (h, i, j, b):
//   (1) h(i-1) < h(i) for i > 1; h(1) > 1 for i = 1
//   (2) j-1 < h(i) = ... = h(j-1) < h(j)
//   (3) no l has i <= h(l) <= j-2
//   (4) 1 <= b <= h(j)-h(i) and h(h(i)) = h(h(i)+1) = ... = h(h(i)+b)
// Throws only on out-of-range (i, j, b).
bool check_relation_conditions(const Hess& h, int i, int j, int b);

// Builds the Step for a triple passing the conditions; the error names the
// first violated condition.  h0 subtracts 1 on {i..j-1}; h2 subtracts 1 on
// {i..j-2} and adds b at j-1.
Step apply_relation(const Hess& h, int i, int j, int b);

// Chooser for non-aligned h: i is smallest with h(h(i)+1) = h(h(i)) and
// h(h(i)) < n, then j = min{l > i : h(l) > h(i)} and b is the largest l
// with h(h(i)+l) = h(h(i)) and h(i)+l <= h(j).  Throws if h is aligned.
struct NonAlignedChoice {
  int i = 0;
  int j = 0;
  int b = 0;
};
NonAlignedChoice choose_step_nonaligned(const Hess& h);

// Chooser for aligned h: leftmost irreducible component that is not
// complete; inside it, j is the first index reaching the component top m,
// i starts the constant run ending at j-1, and b = m - h(i).  Indices are
// global.  Throws if every component is complete.
struct AlignedChoice {
  int component = 0;  // 0-based position among the irreducible components
  int i = 0;
  int j = 0;
  int b = 0;
};
AlignedChoice choose_step_aligned(const Hess& h);

// Memoized reduction to complete products.  The memo is shared between
// threads; concurrent expansions of overlapping inputs are safe.
class Engine {
public:
  // f(h) as a combination of f(k_lambda); base case {lambda: 1} when h is
  // a product of completes (memo key normalized to the sorted product).
  // Iterative worklist, no recursion.
  Expansion expand(const Hess& h);

  // expansion of h as the product over its irreducible components, terms
  // combined by partition union; equal to expand(h) but usually cheaper
  Expansion expand_multiplicative(const Hess& h);

  // internal-iteration bound per expand call; termination is a theorem, so
  // hitting the guard signals an implementation bug
  void set_step_guard(long guard);
  long steps_used() const;  // cumulative relation applications

  std::map<std::vector<int>, Expansion> snapshot() const;
  // merge previously computed entries, validating keys and weights
  void absorb(const std::map<std::vector<int>, Expansion>& entries);

  static Engine& shared();

private:
  bool lookup(const std::vector<int>& key, Expansion& out) const;
  void insert(const std::vector<int>& key, Expansion value);

  mutable std::shared_mutex mu_;
  std::map<std::vector<int>, Expansion> memo_;
  long step_guard_ = 10000000;
  long steps_used_ = 0;
};

// evaluate an expansion against base values; missing values are an error
template <typename T>
T evaluate(const Expansion& exp, const std::map<Partition, T>& base) {
  if (exp.empty())
    throw std::invalid_argument("evaluate: empty expansion");
  std::optional<T> acc;
  for (const auto& [lam, c] : exp) {
    auto it = base.find(lam);
    if (it == base.end())
      throw std::invalid_argument("evaluate: no base value for " + lam.str());
    T term = c * it->second;
    if (acc)
      acc = *acc + term;
    else
      acc.emplace(std::move(term));
  }
  return *acc;
}

// csf_q(h) in the elementary basis: expansion coefficient times
// lambda!_q = prod (lambda_i)!_q, using csf_q(k_lambda) = lambda!_q e_lambda.
// Every coefficient must clear its denominator; failure to do so means an
// engine bug and raises a consistency error.
SymFunc csf_e(const Hess& h, Engine& engine);
SymFunc csf_e(const Hess& h);  // uses Engine::shared()

// Checkers for the two simpler relation families and the q-Vandermonde
// style relation, with f = csf_e on both sides.  Hypothesis violations
// throw; the return value reports whether the identity holds.
//
// basic: h0 subtracts 1 on {i..j-1}, h2 on {i..j-2};
//        f(h1) = [j-i]_q f(h2) + (1 - [j-i]_q) f(h0)
bool verify_relation_basic(const Hess& h, int i, int j);
// dual: h0 resp. h2 replace h(i) by a resp. a+1, where h is constant on
//       positions a+1..h(i);
//       f(h1) = [h(i)-a]_q f(h2) + (1 - [h(i)-a]_q) f(h0)
bool verify_relation_basic_dual(const Hess& h, int i, int a);
// C(a+b,a)_q f(h) = sum_{k=0}^{min(a,l)} q^{(a-k)(l-k)} C(a+b-l,a-k)_q
//                   C(l,k)_q f(h_k) with l = j-i, where h_k subtracts a on
//                   {i..j-1-k} and adds b on {j-k..j-1}
bool verify_chu_vandermonde(const Hess& h, int i, int j, int a, int b);

}  // namespace chromod
