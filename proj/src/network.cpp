#include "chromod/network.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace chromod {

namespace {

void require_abelian(const Hess& h, const char* who) {
  if (!h.is_abelian())
    throw std::invalid_argument(std::string(who) + ": h must be abelian, got " +
                                h.str());
}

// one level above the last column staying below n; (0, n) for the complete path
NetworkPoint start_point(const Hess& h) {
  const int n = h.n();
  if (h(1) == n) return {0, n};
  int i0 = 1;
  for (int j = 1; j <= n; ++j)
    if (h(j) < n) i0 = j;
  return {i0, h(i0)};
}

}  // namespace

int backstep(const Hess& h, int i, int j) {
  if (i < 0 || i > h.n() || j < 1 || j > h.n())
    throw std::out_of_range("backstep: point (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") outside the lattice");
  for (int k = 0; k < i; ++k)
    if (h(i - k) < j) return k;
  return i;  // h(0) = 0 lies below every level
}

PlanarNetwork build_network(const Hess& h) {
  require_abelian(h, "build_network");
  const int n = h.n();
  PlanarNetwork net;
  net.n = n;
  net.start = start_point(h);
  // sweep level by level; an interior point always emits its vertical step
  // and, away from column 0, its diagonal step
  std::set<int> cols{net.start.first};
  for (int j = net.start.second; j >= 1; --j) {
    std::set<int> next;
    for (int i : cols) {
      const NetworkPoint p{i, j};
      if (i == j) {
        net.endpoints.emplace(p, Partition::from_multiset({i, n - i}));
        continue;
      }
      QRat diag = QRat(q_int(backstep(h, i, j))) / QRat(q_int(n - j + 1));
      net.edges.emplace(std::make_pair(p, NetworkStep::vertical),
                        QRat(1) - diag);
      next.insert(i);
      if (i > 0) {
        net.edges.emplace(std::make_pair(p, NetworkStep::diagonal),
                          std::move(diag));
        next.insert(i - 1);
      }
    }
    cols = std::move(next);
  }
  for (int i : cols)  // level 0: only the origin can remain
    net.endpoints.emplace(NetworkPoint{i, 0},
                          Partition::from_multiset({i, n - i}));
  return net;
}

std::map<int, QPoly> endpoint_numerators(const Hess& h) {
  require_abelian(h, "endpoint_numerators");
  const int n = h.n();
  const NetworkPoint start = start_point(h);
  std::map<int, QPoly> level{{start.first, QPoly(1)}};
  std::map<int, QPoly> out;
  for (int j = start.second; j >= 1; --j) {
    std::map<int, QPoly> next;
    for (auto& [i, num] : level) {
      if (i == j) {
        out[i] += num;
        continue;
      }
      const QPoly a = q_int(backstep(h, i, j));
      const QPoly d = q_int(n - j + 1);
      next[i] += (d - a) * num;
      if (i > 0) next[i - 1] += a * num;
    }
    level = std::move(next);
  }
  for (auto& [i, num] : level) out[i] += num;
  return out;
}

Expansion network_expansion(const Hess& h) {
  require_abelian(h, "network_expansion");
  const int n = h.n();
  const QPoly scale = q_factorial(n - start_point(h).second);
  Expansion out;
  for (auto& [l, num] : endpoint_numerators(h)) {
    if (num.is_zero()) continue;
    // (l, l) and (n-l, n-l) stand for the same product and can both occur
    out[Partition::from_multiset({l, n - l})] +=
        QRat(num * scale, q_factorial(n - l));
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

QRat evaluate_network(const PlanarNetwork& net,
                      const std::map<Partition, QRat>& base) {
  std::optional<QRat> acc;
  auto payout = [&](int l, const QRat& mass) {
    auto ep = net.endpoints.find({l, l});
    if (ep == net.endpoints.end())
      throw std::invalid_argument(
          "evaluate_network: path stops at a point that is not an endpoint");
    auto bt = base.find(ep->second);
    if (bt == base.end())
      throw std::invalid_argument("evaluate_network: no base value for " +
                                  ep->second.str());
    QRat term = mass * bt->second;
    if (acc)
      acc = *acc + term;
    else
      acc.emplace(std::move(term));
  };
  std::map<int, QRat> level{{net.start.first, QRat(1)}};
  for (int j = net.start.second; j >= 1; --j) {
    std::map<int, QRat> next;
    for (auto& [i, mass] : level) {
      if (i == j) {
        payout(i, mass);
        continue;
      }
      auto vert = net.edges.find({{i, j}, NetworkStep::vertical});
      if (vert == net.edges.end())
        throw std::invalid_argument(
            "evaluate_network: interior point without a vertical step");
      next[i] += mass * vert->second;
      auto diag = net.edges.find({{i, j}, NetworkStep::diagonal});
      if (diag != net.edges.end()) next[i - 1] += mass * diag->second;
    }
    level = std::move(next);
  }
  for (auto& [i, mass] : level) payout(i, mass);
  if (!acc) throw std::invalid_argument("evaluate_network: empty network");
  return *acc;
}

bool is_manifestly_positive(const Hess& h) {
  require_abelian(h, "is_manifestly_positive");
  const int n = h.n();
  int j0 = n;
  for (int j = 1; j <= n; ++j) {
    if (h(j) == n) {
      j0 = j;
      break;
    }
  }
  for (int i = 1; i <= n; ++i)
    if (h(i) - i > n - j0) return false;
  return true;
}

}  // namespace chromod
