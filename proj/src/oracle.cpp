#include "chromod/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace chromod {

XPoly::XPoly(const QRat& constant) {
  if (!constant.is_zero()) coeffs_.emplace(0, constant);
}

XPoly XPoly::variable() {
  XPoly x;
  x.coeffs_.emplace(1, QRat(1));
  return x;
}

QRat XPoly::coefficient(int d) const {
  auto it = coeffs_.find(d);
  return it == coeffs_.end() ? QRat() : it->second;
}

void XPoly::add_term(int d, const QRat& c) {
  if (d < 0) throw std::invalid_argument("XPoly: negative degree");
  auto it = coeffs_.find(d);
  if (it == coeffs_.end()) {
    if (!c.is_zero()) coeffs_.emplace(d, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

int XPoly::degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

XPoly operator+(const XPoly& a, const XPoly& b) {
  XPoly r = a;
  for (const auto& [d, c] : b.coeffs_) r.add_term(d, c);
  return r;
}

XPoly operator-(const XPoly& a, const XPoly& b) {
  XPoly r = a;
  for (const auto& [d, c] : b.coeffs_) r.add_term(d, -c);
  return r;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  XPoly r;
  for (const auto& [da, ca] : a.coeffs_)
    for (const auto& [db, cb] : b.coeffs_) r.add_term(da + db, ca * cb);
  return r;
}

XPoly operator*(const QRat& c, const XPoly& f) {
  XPoly r;
  if (c.is_zero()) return r;
  for (const auto& [d, x] : f.coeffs_) r.coeffs_.emplace(d, c * x);
  return r;
}

std::string XPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!first) os << " + ";
    os << "(" << it->second.str() << ")";
    if (it->first == 1)
      os << "*x";
    else if (it->first > 1)
      os << "*x^" << it->first;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const XPoly& f) { return os << f.str(); }

namespace {

// ascent-count histograms keyed by the sorted color-count vector
using Buckets = std::map<std::vector<int>, std::vector<unsigned long>>;

struct ColoringScan {
  int n;
  int colors;
  std::vector<int> lo;  // lo[v]: first j with h(j) >= v; lower nbrs of v are [lo[v], v)
  int max_asc;

  std::vector<int> kappa;   // 1-based colors, kappa[v]
  std::vector<int> counts;  // counts[c] occurrences of color c
  Buckets buckets;

  void record_leaf(int asc) {
    std::vector<int> key(counts.begin() + 1, counts.end());
    std::sort(key.begin(), key.end(), std::greater<int>());
    while (!key.empty() && key.back() == 0) key.pop_back();
    auto& hist = buckets[key];
    if (hist.empty()) hist.assign(max_asc + 1, 0);
    ++hist[asc];
  }

  void extend(int v, int asc) {
    if (v > n) {
      record_leaf(asc);
      return;
    }
    for (int c = 1; c <= colors; ++c) {
      bool clash = false;
      int rises = 0;
      for (int j = lo[v]; j < v; ++j) {
        if (kappa[j] == c) {
          clash = true;
          break;
        }
        if (kappa[j] < c) ++rises;
      }
      if (clash) continue;
      kappa[v] = c;
      ++counts[c];
      extend(v + 1, asc + rises);
      --counts[c];
    }
  }
};

}  // namespace

SymFunc csf_oracle(const Hess& h, int colors, bool unsafe) {
  const int n = h.n();
  if (n > 8 && !unsafe)
    throw std::invalid_argument("csf_oracle: n=" + std::to_string(n) +
                                " exceeds the enumeration bound 8");
  if (colors == 0) colors = n;
  if (colors < n)
    throw std::invalid_argument(
        "csf_oracle: need at least n colors to identify all coefficients");

  SymFunc out(n, Basis::m);
  if (n == 0) {
    out.add_term(Partition(), QRat(1));
    return out;
  }

  std::vector<int> lo(n + 1, 1);
  for (int v = 1; v <= n; ++v) {
    int j = 1;
    while (j < v && h(j) < v) ++j;
    lo[v] = j;
  }
  int max_asc = 0;
  for (int i = 1; i <= n; ++i) max_asc += h(i) - i;

  // split the color of vertex 1 across workers
  unsigned want = std::thread::hardware_concurrency();
  int nworkers = std::min<int>(colors, want == 0 ? 1 : static_cast<int>(want));
  std::vector<ColoringScan> scans(nworkers);
  for (auto& s : scans) {
    s.n = n;
    s.colors = colors;
    s.lo = lo;
    s.max_asc = max_asc;
    s.kappa.assign(n + 1, 0);
    s.counts.assign(colors + 1, 0);
  }
  auto run = [&](int w) {
    ColoringScan& s = scans[w];
    for (int c1 = w + 1; c1 <= colors; c1 += nworkers) {
      s.kappa[1] = c1;
      ++s.counts[c1];
      s.extend(2, 0);
      --s.counts[c1];
    }
  };
  if (nworkers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < nworkers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  Buckets merged;
  for (auto& s : scans)
    for (auto& [key, hist] : s.buckets) {
      auto& acc = merged[key];
      if (acc.empty()) acc.assign(max_asc + 1, 0);
      for (int a = 0; a <= max_asc; ++a) acc[a] += hist[a];
    }

  for (auto& [key, hist] : merged) {
    std::vector<mpz_class> cs;
    cs.reserve(hist.size());
    for (unsigned long v : hist) cs.emplace_back(v);
    Partition lambda{std::vector<int>(key)};
    QPoly bucket{std::move(cs)};
    out.add_term(lambda, QRat(bucket, QPoly(lambda.arrangements(colors))));
  }
  return out;
}

XPoly chromatic_poly_q(const Hess& h) {
  XPoly r{QRat(1)};
  for (int i = 1; i <= h.n(); ++i) {
    XPoly factor = XPoly::variable();
    factor.add_term(0, -QRat(q_int(h(i) - i)));
    r = r * factor;
  }
  return r;
}

XPoly alpha_apply(const SymFunc& f) {
  if (f.basis() != Basis::e)
    throw std::invalid_argument("alpha_apply: expected an e-basis function");
  std::map<int, XPoly> alpha_e;
  auto image = [&](int k) -> const XPoly& {
    auto it = alpha_e.find(k);
    if (it != alpha_e.end()) return it->second;
    XPoly p{QRat(1)};
    for (int j = 0; j < k; ++j) {
      XPoly factor = XPoly::variable();
      factor.add_term(0, -QRat(q_int(j)));
      p = p * factor;
    }
    p = QRat(QPoly(1), q_factorial(k)) * p;
    return alpha_e.emplace(k, std::move(p)).first->second;
  };
  XPoly out;
  for (const auto& [lam, c] : f.coeffs()) {
    XPoly term{c};
    for (int part : lam.parts()) term = term * image(part);
    out = out + term;
  }
  return out;
}

}  // namespace chromod
