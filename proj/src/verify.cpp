#include "chromod/verify.hpp"

#include "chromod/analysis.hpp"
#include "chromod/network.hpp"
#include "chromod/oracle.hpp"
#include "chromod/qhit.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace chromod {

namespace {

void note_failure(SuiteResult& r, const std::string& instance) {
  ++r.failed;
  if (r.detail.empty()) r.detail = instance;
}

// all partitions with first part <= m and length <= m, empty included
std::vector<Partition> partitions_in_board(int m) {
  std::vector<Partition> out{Partition()};
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int maxp) {
    if (static_cast<int>(cur.size()) == m) return;
    for (int p = maxp; p >= 1; --p) {
      cur.push_back(p);
      out.push_back(Partition(cur));
      rec(p);
      cur.pop_back();
    }
  };
  rec(m);
  return out;
}

SuiteResult suite_basicrel(int max_n) {
  SuiteResult r{"basicrel"};
  for (int n = 2; n <= max_n; ++n)
    for_each_hess(n, [&](const Hess& h) {
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          bool ok;
          try {
            ok = verify_relation_basic(h, i, j);
          } catch (const std::invalid_argument&) {
            continue;
          }
          ++r.checked;
          if (!ok)
            note_failure(r, "h=" + h.str() + " i=" + std::to_string(i) +
                                " j=" + std::to_string(j));
        }
    });
  return r;
}

SuiteResult suite_basicreldual(int max_n) {
  SuiteResult r{"basicreldual"};
  for (int n = 2; n <= max_n; ++n)
    for_each_hess(n, [&](const Hess& h) {
      for (int i = 1; i <= n; ++i)
        for (int a = 1; a <= n; ++a) {
          bool ok;
          try {
            ok = verify_relation_basic_dual(h, i, a);
          } catch (const std::invalid_argument&) {
            continue;
          }
          ++r.checked;
          if (!ok)
            note_failure(r, "h=" + h.str() + " i=" + std::to_string(i) +
                                " a=" + std::to_string(a));
        }
    });
  return r;
}

SuiteResult suite_cv(int max_n) {
  SuiteResult r{"cv"};
  for (int n = 2; n <= max_n; ++n)
    for_each_hess(n, [&](const Hess& h) {
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b) {
              bool ok;
              try {
                ok = verify_chu_vandermonde(h, i, j, a, b);
              } catch (const std::invalid_argument&) {
                continue;
              }
              ++r.checked;
              if (!ok)
                note_failure(r, "h=" + h.str() + " i=" + std::to_string(i) +
                                    " j=" + std::to_string(j) +
                                    " a=" + std::to_string(a) +
                                    " b=" + std::to_string(b));
            }
    });
  return r;
}

SuiteResult suite_rjm(int max_n) {
  SuiteResult r{"rjm"};
  for (int m = 2; m <= std::min(max_n, 5); ++m)
    for (const auto& lam : partitions_in_board(m)) {
      if (lam.part(1) > m - 1 || lam.length() > m - 1) continue;
      for (int j : {lam.length(), lam.part(1)}) {
        ++r.checked;
        if (q_hit_number(j, m, lam) !=
            (q_int(m) - q_int(j)) * q_hit_number(j, m - 1, lam))
          note_failure(r, "m=" + std::to_string(m) + " lambda=" + lam.str() +
                              " j=" + std::to_string(j));
      }
    }
  return r;
}

SuiteResult suite_rjrel(int max_n) {
  SuiteResult r{"rjrel"};
  for (int m = 2; m <= std::min(max_n, 5); ++m)
    for (const auto& lam : partitions_in_board(m))
      for (int i = 1; i <= lam.length(); ++i) {
        const int prev = (i == 1) ? m + 1 : lam.part(i - 1);
        if (!(lam.part(i + 1) < lam.part(i) && lam.part(i) < prev)) continue;
        if (lam.part(i) + 1 > m) continue;
        std::vector<int> up, down;
        for (int t = 1; t <= lam.length(); ++t) {
          down.push_back(lam.part(t) - (t == i ? 1 : 0));
          up.push_back(lam.part(t) + (t == i ? 1 : 0));
        }
        const Partition mu = Partition::from_multiset(down);
        const Partition sigma = Partition::from_multiset(up);
        for (int j = 0; j <= m; ++j) {
          ++r.checked;
          if (q_int(2) * q_hit_number(j, m, lam) !=
              QPoly::monomial(1, 1) * q_hit_number(j, m, sigma) +
                  q_hit_number(j, m, mu))
            note_failure(r, "m=" + std::to_string(m) + " lambda=" + lam.str() +
                                " part=" + std::to_string(i) +
                                " j=" + std::to_string(j));
        }
      }
  return r;
}

SuiteResult suite_qhit_thm(int max_n) {
  SuiteResult r{"qhit-thm"};
  for (int n = 1; n <= std::min(max_n, 8); ++n)
    for_each_hess(n, [&](const Hess& h) {
      if (!h.is_abelian()) return;
      ++r.checked;
      if (!(csf_abelian_qhit(h) == csf_e(h))) note_failure(r, "h=" + h.str());
    });
  return r;
}

SuiteResult suite_network_eq(int max_n) {
  SuiteResult r{"network-eq"};
  for (int n = 1; n <= max_n; ++n)
    for_each_hess(n, [&](const Hess& h) {
      if (!h.is_abelian()) return;
      ++r.checked;
      if (network_expansion(h) != Engine::shared().expand(h))
        note_failure(r, "h=" + h.str());
    });
  return r;
}

SuiteResult suite_transpose(int max_n) {
  SuiteResult r{"transpose"};
  for (int n = 1; n <= max_n; ++n)
    for_each_hess(n, [&](const Hess& h) {
      ++r.checked;
      if (!(csf_e(h) == csf_e(h.transposed())))
        note_failure(r, "h=" + h.str());
    });
  return r;
}

SuiteResult suite_palindromic(int max_n) {
  SuiteResult r{"palindromic"};
  for (int n = 1; n <= max_n; ++n)
    for_each_hess(n, [&](const Hess& h) {
      const auto area = h.area_sequence();
      const int two_center = std::accumulate(area.begin(), area.end(), 0);
      const SymFunc f = csf_e(h);
      for (const auto& [lambda, c] : f.coeffs()) {
        ++r.checked;
        const auto p = c.is_polynomial();
        if (!p || !is_palindromic(*p, two_center))
          note_failure(r, "h=" + h.str() + " lambda=" + lambda.str());
      }
    });
  return r;
}

SuiteResult suite_alpha_chi(int max_n) {
  SuiteResult r{"alpha-chi"};
  for (int n = 1; n <= max_n; ++n)
    for_each_hess(n, [&](const Hess& h) {
      ++r.checked;
      if (!(alpha_apply(csf_e(h)) == chromatic_poly_q(h)))
        note_failure(r, "h=" + h.str());
    });
  return r;
}

using SuiteFn = SuiteResult (*)(int);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"basicrel", suite_basicrel},   {"basicreldual", suite_basicreldual},
      {"cv", suite_cv},               {"rjm", suite_rjm},
      {"rjrel", suite_rjrel},         {"qhit-thm", suite_qhit_thm},
      {"network-eq", suite_network_eq}, {"transpose", suite_transpose},
      {"palindromic", suite_palindromic}, {"alpha-chi", suite_alpha_chi},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_verify_suite(const std::string& name, int max_n) {
  if (max_n < 1 || max_n > 14)
    throw std::invalid_argument("run_verify_suite: max_n must lie in [1, 14]");
  for (const auto& [suite, fn] : suite_table())
    if (suite == name) return fn(max_n);
  throw std::invalid_argument("run_verify_suite: unknown suite " + name);
}

std::vector<SuiteResult> run_all_verify_suites(int max_n) {
  std::vector<SuiteResult> out;
  out.reserve(suite_table().size());
  for (const auto& [name, fn] : suite_table())
    out.push_back(run_verify_suite(name, max_n));
  return out;
}

}  // namespace chromod
