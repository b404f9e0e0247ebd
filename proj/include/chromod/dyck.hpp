// Hessenberg functions h:[n] -> [n], equivalently Dyck paths: construction,
// structural predicates, products, transpose, and enumeration.
#pragma once

#include "chromod/partition.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace chromod {

// Non-decreasing h with i <= h(i) <= n. The associated indifference graph
// has edges {i,j} for i < j <= h(i). The same data is the Dyck path with
// h(i) north steps before the i-th east step.
class Hess {
public:
  // validates; the error message names the offending index
  explicit Hess(std::vector<int> values);
  // parses a word over {n,e}; the error names the first offending position
  static Hess from_word(const std::string& w);
  static Hess complete(int m);  // k_m
  static Hess complete_product(const Partition& lambda);

  int n() const { return static_cast<int>(v_.size()); }
  // 1-based; h(0) reads as 0
  int operator()(int i) const;
  const std::vector<int>& values() const { return v_; }

  std::string to_word() const;
  Hess transposed() const;
  std::vector<Hess> irreducible_components() const;
  // true when every irreducible component is aligned: within a component of
  // size m, each i has h(h(i)) = m or h(h(i)+1) > h(h(i))
  bool is_aligned() const;
  // literal condition h(h(1)+1) = n, with h(n+1) read as n when h(1) = n
  bool is_abelian() const;
  std::vector<int> area_sequence() const;
  // the multiset of complete factors, sorted decreasingly, when h is a
  // product of complete paths
  std::optional<Partition> as_complete_product() const;

  friend Hess operator*(const Hess& a, const Hess& b);
  bool operator==(const Hess&) const = default;
  bool operator<(const Hess& o) const { return v_ < o.v_; }
  std::string str() const;

private:
  std::vector<int> v_;
};

std::ostream& operator<<(std::ostream& os, const Hess& h);

// Visit every Hessenberg function of size n exactly once, in increasing
// value order. Guard: 1 <= n <= 14.
void for_each_hess(int n, const std::function<void(const Hess&)>& fn);
// Materialized enumeration; count = Catalan(n).
std::vector<Hess> enumerate_hess(int n);

}  // namespace chromod
