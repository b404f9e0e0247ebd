#include "chromod/dyck.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace chromod {

Hess::Hess(std::vector<int> values) : v_(std::move(values)) {
  const int n = static_cast<int>(v_.size());
  for (int i = 1; i <= n; ++i) {
    if (v_[i - 1] < i)
      throw std::invalid_argument("Hess: h(" + std::to_string(i) + ")=" +
                                  std::to_string(v_[i - 1]) + " is below i");
    if (v_[i - 1] > n)
      throw std::invalid_argument("Hess: h(" + std::to_string(i) + ")=" +
                                  std::to_string(v_[i - 1]) + " exceeds n=" +
                                  std::to_string(n));
    if (i >= 2 && v_[i - 1] < v_[i - 2])
      throw std::invalid_argument("Hess: h decreases at index " + std::to_string(i));
  }
}

Hess Hess::from_word(const std::string& w) {
  int north = 0, east = 0;
  std::vector<int> vals;
  for (size_t pos = 0; pos < w.size(); ++pos) {
    char c = w[pos];
    if (c == 'n') {
      ++north;
    } else if (c == 'e') {
      ++east;
      if (east > north)
        throw std::invalid_argument("from_word: path dips below the diagonal at position " +
                                    std::to_string(pos + 1));
      vals.push_back(north);
    } else {
      throw std::invalid_argument("from_word: invalid character at position " +
                                  std::to_string(pos + 1));
    }
  }
  if (north != east)
    throw std::invalid_argument("from_word: unbalanced word (" + std::to_string(north) +
                                " north, " + std::to_string(east) + " east)");
  return Hess(std::move(vals));
}

Hess Hess::complete(int m) {
  if (m < 0) throw std::invalid_argument("Hess::complete: negative size");
  return Hess(std::vector<int>(m, m));
}

Hess Hess::complete_product(const Partition& lambda) {
  Hess h{std::vector<int>{}};
  for (int p : lambda.parts()) h = h * complete(p);
  return h;
}

int Hess::operator()(int i) const {
  if (i == 0) return 0;
  if (i < 1 || i > n()) throw std::out_of_range("Hess: index " + std::to_string(i));
  return v_[i - 1];
}

std::string Hess::to_word() const {
  std::string w;
  int north = 0;
  for (int i = 1; i <= n(); ++i) {
    for (; north < v_[i - 1]; ++north) w += 'n';
    w += 'e';
  }
  return w;
}

Hess Hess::transposed() const {
  std::string w = to_word();
  std::string t(w.rbegin(), w.rend());
  for (char& c : t) c = (c == 'n') ? 'e' : 'n';
  return from_word(t);
}

std::vector<Hess> Hess::irreducible_components() const {
  std::vector<Hess> out;
  int start = 0;  // 0-based start of the current component
  int reach = 0;
  for (int i = 1; i <= n(); ++i) {
    if (v_[i - 1] > reach) reach = v_[i - 1];
    if (reach == i) {
      std::vector<int> comp(v_.begin() + start, v_.begin() + i);
      for (int& x : comp) x -= start;
      out.push_back(Hess(std::move(comp)));
      start = i;
    }
  }
  return out;
}

bool Hess::is_aligned() const {
  for (const Hess& c : irreducible_components()) {
    const int m = c.n();
    for (int i = 1; i <= m; ++i) {
      int top = c(c(i));
      if (top == m) continue;
      // c(i) < m here: c(i) = m would force c(c(i)) = m
      if (!(c(c(i) + 1) > top)) return false;
    }
  }
  return true;
}

bool Hess::is_abelian() const {
  const int nn = n();
  if (nn == 0) return true;
  if (v_[0] == nn) return true;  // h(n+1) read as n
  return (*this)(v_[0] + 1) == nn;
}

std::vector<int> Hess::area_sequence() const {
  std::vector<int> a(v_.size());
  for (int i = 1; i <= n(); ++i) a[i - 1] = v_[i - 1] - i;
  return a;
}

std::optional<Partition> Hess::as_complete_product() const {
  std::vector<int> sizes;
  for (const Hess& c : irreducible_components()) {
    const int m = c.n();
    for (int i = 1; i <= m; ++i)
      if (c(i) != m) return std::nullopt;
    sizes.push_back(m);
  }
  return Partition::from_multiset(std::move(sizes));
}

Hess operator*(const Hess& a, const Hess& b) {
  std::vector<int> v = a.v_;
  v.reserve(a.v_.size() + b.v_.size());
  for (int x : b.v_) v.push_back(x + a.n());
  return Hess(std::move(v));
}

std::string Hess::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v_.size(); ++i) {
    if (i) os << ",";
    os << v_[i];
  }
  os << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Hess& h) { return os << h.str(); }

namespace {

void gen_hess(int n, int i, std::vector<int>& cur,
              const std::function<void(const Hess&)>& fn) {
  if (i > n) {
    fn(Hess(cur));
    return;
  }
  int lo = std::max(i, i == 1 ? 1 : cur[i - 2]);
  for (int v = lo; v <= n; ++v) {
    cur[i - 1] = v;
    gen_hess(n, i + 1, cur, fn);
  }
}

}  // namespace

void for_each_hess(int n, const std::function<void(const Hess&)>& fn) {
  if (n < 1 || n > 14)
    throw std::invalid_argument("for_each_hess: n out of range [1,14]");
  std::vector<int> cur(n);
  gen_hess(n, 1, cur, fn);
}

std::vector<Hess> enumerate_hess(int n) {
  std::vector<Hess> out;
  for_each_hess(n, [&](const Hess& h) { out.push_back(h); });
  return out;
}

}  // namespace chromod
