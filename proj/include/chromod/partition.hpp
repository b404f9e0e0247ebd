// Integer partitions: the index type for complete products, symmetric
// function bases, and rook boards.
#pragma once

#include "chromod/qpoly.hpp"

#include <string>
#include <vector>

namespace chromod {

// Weakly decreasing sequence of positive parts; the empty partition has
// weight 0. The ordering sorts by weight first, then reverse
// lexicographically within a weight: (n) comes first, (1,...,1) last.
class Partition {
public:
  Partition() = default;
  // validates: parts weakly decreasing, all >= 1
  explicit Partition(std::vector<int> parts);
  // sorts a multiset of nonnegative values, dropping zeros
  static Partition from_multiset(std::vector<int> values);

  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const;  // 1-based; 0 beyond the length

  Partition transposed() const;
  // prod over parts of part!_q
  QPoly q_factorial_product() const;
  // number of distinct rearrangements of the parts among `slots` slots,
  // zero-padded; 0 if length exceeds slots
  mpz_class arrangements(int slots) const;

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const;
  std::string str() const;

private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// All partitions of n in the Partition ordering ((n) first).
std::vector<Partition> partitions_of(int n);

}  // namespace chromod
