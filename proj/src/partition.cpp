#include "chromod/partition.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace chromod {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("Partition: part " + std::to_string(i + 1) +
                                  " is not positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts increase at position " +
                                  std::to_string(i + 1));
  }
}

Partition Partition::from_multiset(std::vector<int> values) {
  for (int v : values)
    if (v < 0) throw std::invalid_argument("Partition::from_multiset: negative value");
  std::sort(values.begin(), values.end(), std::greater<int>());
  while (!values.empty() && values.back() == 0) values.pop_back();
  return Partition(std::move(values));
}

int Partition::weight() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("Partition::part: index < 1");
  if (i > length()) return 0;
  return parts_[i - 1];
}

Partition Partition::transposed() const {
  std::vector<int> t;
  if (parts_.empty()) return Partition();
  t.reserve(parts_[0]);
  for (int j = 1; j <= parts_[0]; ++j) {
    int c = 0;
    for (int p : parts_)
      if (p >= j) ++c;
    t.push_back(c);
  }
  return Partition(std::move(t));
}

QPoly Partition::q_factorial_product() const {
  QPoly r(1);
  for (int p : parts_) r = r * q_factorial(p);
  return r;
}

mpz_class Partition::arrangements(int slots) const {
  if (length() > slots) return 0;
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), slots);
  mpz_class d;
  int run = 1;
  for (size_t i = 1; i <= parts_.size(); ++i) {
    if (i < parts_.size() && parts_[i] == parts_[i - 1]) {
      ++run;
    } else {
      mpz_fac_ui(d.get_mpz_t(), run);
      mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
      run = 1;
    }
  }
  mpz_fac_ui(d.get_mpz_t(), slots - length());
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
  return r;
}

bool Partition::operator<(const Partition& o) const {
  int w = weight(), wo = o.weight();
  if (w != wo) return w < wo;
  // reverse lexicographic: larger first part comes first
  return std::lexicographical_compare(o.parts_.begin(), o.parts_.end(),
                                      parts_.begin(), parts_.end());
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n == 0 ? 1 : n, cur, out);
  return out;
}

}  // namespace chromod
