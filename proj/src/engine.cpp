#include "chromod/engine.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace chromod {

namespace {

// 0 if all conditions hold, else the number of the first failed one
int first_failed_condition(const Hess& h, int i, int j, int b) {
  const int n = h.n();
  if (i < 1 || j <= i || j > n || b < 1)
    throw std::out_of_range("relation indices: need 1 <= i < j <= n and b >= 1");
  if (i == 1 ? h(1) <= 1 : h(i - 1) >= h(i)) return 1;
  if (j - 1 >= h(i)) return 2;
  for (int l = i + 1; l < j; ++l)
    if (h(l) != h(i)) return 2;
  if (h(j - 1) >= h(j)) return 2;
  for (int l = 1; l <= n; ++l)
    if (i <= h(l) && h(l) <= j - 2) return 3;
  if (b > h(j) - h(i)) return 4;
  for (int l = 1; l <= b; ++l)
    if (h(h(i) + l) != h(h(i))) return 4;
  return 0;
}

}  // namespace

bool check_relation_conditions(const Hess& h, int i, int j, int b) {
  return first_failed_condition(h, i, j, b) == 0;
}

Step apply_relation(const Hess& h, int i, int j, int b) {
  int failed = first_failed_condition(h, i, j, b);
  if (failed != 0)
    throw std::invalid_argument("apply_relation: condition (" +
                                std::to_string(failed) + ") fails for i=" +
                                std::to_string(i) + " j=" + std::to_string(j) +
                                " b=" + std::to_string(b) + " on " + h.str());
  std::vector<int> v0 = h.values(), v2 = h.values();
  for (int l = i; l <= j - 1; ++l) v0[l - 1] -= 1;
  for (int l = i; l <= j - 2; ++l) v2[l - 1] -= 1;
  v2[j - 2] += b;  // j >= i+1, so position j-1 exists
  QRat c2(QPoly(q_int(j - i)), QPoly(q_int(b + 1)));
  return Step{i, j, b, Hess(std::move(v0)), Hess(std::move(v2)), c2,
              QRat(1) - c2};
}

NonAlignedChoice choose_step_nonaligned(const Hess& h) {
  if (h.is_aligned())
    throw std::invalid_argument("choose_step_nonaligned: " + h.str() +
                                " is aligned");
  const int n = h.n();
  int i = 0;
  for (int c = 1; c <= n; ++c) {
    int top = h(c);
    if (top + 1 <= n && h(top) < n && h(top + 1) == h(top)) {
      i = c;
      break;
    }
  }
  if (i == 0)
    throw std::logic_error("choose_step_nonaligned: no witness in " + h.str());
  int j = 0;
  for (int l = i + 1; l <= n; ++l)
    if (h(l) > h(i)) {
      j = l;
      break;
    }
  if (j == 0)
    throw std::logic_error("choose_step_nonaligned: no j for " + h.str());
  int b = 0;
  for (int l = 1; h(i) + l <= h(j) && h(h(i) + l) == h(h(i)); ++l) b = l;
  NonAlignedChoice choice{i, j, b};
  if (!check_relation_conditions(h, choice.i, choice.j, choice.b))
    throw std::logic_error("choose_step_nonaligned: chosen step fails its "
                           "conditions on " + h.str());
  return choice;
}

AlignedChoice choose_step_aligned(const Hess& h) {
  if (!h.is_aligned())
    throw std::invalid_argument("choose_step_aligned: " + h.str() +
                                " is not aligned");
  std::vector<Hess> comps = h.irreducible_components();
  int offset = 0;
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    const Hess& f = comps[c];
    const int m = f.n();
    if (f(1) == m) {
      offset += m;
      continue;  // complete component
    }
    int j = 1;
    while (f(j) < m) ++j;
    int i = j - 1;
    while (i > 1 && f(i - 1) == f(j - 1)) --i;
    int b = m - f(i);
    AlignedChoice choice{c, offset + i, offset + j, b};
    if (!check_relation_conditions(h, choice.i, choice.j, choice.b))
      throw std::logic_error("choose_step_aligned: chosen step fails its "
                             "conditions on " + h.str());
    return choice;
  }
  throw std::invalid_argument("choose_step_aligned: every component of " +
                              h.str() + " is complete");
}

namespace {

std::vector<int> memo_key(const Hess& h) {
  if (auto lam = h.as_complete_product())
    return Hess::complete_product(*lam).values();
  return h.values();
}

Step step_for(const Hess& h) {
  if (h.is_aligned()) {
    AlignedChoice c = choose_step_aligned(h);
    return apply_relation(h, c.i, c.j, c.b);
  }
  NonAlignedChoice c = choose_step_nonaligned(h);
  return apply_relation(h, c.i, c.j, c.b);
}

}  // namespace

bool Engine::lookup(const std::vector<int>& key, Expansion& out) const {
  std::shared_lock lock(mu_);
  auto it = memo_.find(key);
  if (it == memo_.end()) return false;
  out = it->second;
  return true;
}

void Engine::insert(const std::vector<int>& key, Expansion value) {
  std::unique_lock lock(mu_);
  memo_.emplace(key, std::move(value));
}

Expansion Engine::expand(const Hess& h) {
  long guard;
  {
    std::shared_lock lock(mu_);
    guard = step_guard_;
  }
  long iterations = 0;
  long applications = 0;
  std::vector<Hess> work{h};
  Expansion scratch;
  while (!work.empty()) {
    if (++iterations > 4 * guard || applications > guard)
      throw std::runtime_error(
          "Engine::expand: step guard exceeded; the reduction should "
          "terminate, so this is a bug");
    Hess cur = work.back();
    std::vector<int> key = memo_key(cur);
    if (lookup(key, scratch)) {
      work.pop_back();
      continue;
    }
    if (auto lam = cur.as_complete_product()) {
      insert(key, Expansion{{*lam, QRat(1)}});
      work.pop_back();
      continue;
    }
    Step st = step_for(cur);
    bool use_h0 = !st.coeff_h0.is_zero();  // zero when b+1 = j-i
    Expansion e0, e2;
    bool have2 = lookup(memo_key(st.h2), e2);
    bool have0 = !use_h0 || lookup(memo_key(st.h0), e0);
    if (!have2 || !have0) {
      if (!have2) work.push_back(st.h2);
      if (!have0) work.push_back(st.h0);
      continue;
    }
    ++applications;
    Expansion combined;
    for (const auto& [lam, c] : e2) {
      QRat scaled = st.coeff_h2 * c;
      if (!scaled.is_zero()) combined[lam] += scaled;
    }
    for (const auto& [lam, c] : e0) {
      QRat scaled = st.coeff_h0 * c;
      if (!scaled.is_zero()) combined[lam] += scaled;
    }
    for (auto it = combined.begin(); it != combined.end();)
      it = it->second.is_zero() ? combined.erase(it) : std::next(it);
    insert(key, std::move(combined));
    work.pop_back();
  }
  {
    std::unique_lock lock(mu_);
    steps_used_ += applications;
  }
  Expansion result;
  lookup(memo_key(h), result);
  return result;
}

Expansion Engine::expand_multiplicative(const Hess& h) {
  Expansion acc{{Partition(), QRat(1)}};
  for (const Hess& comp : h.irreducible_components()) {
    Expansion part = expand(comp);
    Expansion next;
    for (const auto& [lamA, ca] : acc)
      for (const auto& [lamB, cb] : part) {
        std::vector<int> merged = lamA.parts();
        merged.insert(merged.end(), lamB.parts().begin(), lamB.parts().end());
        QRat c = ca * cb;
        if (!c.is_zero()) next[Partition::from_multiset(std::move(merged))] += c;
      }
    for (auto it = next.begin(); it != next.end();)
      it = it->second.is_zero() ? next.erase(it) : std::next(it);
    acc = std::move(next);
  }
  return acc;
}

void Engine::set_step_guard(long guard) {
  if (guard <= 0) throw std::invalid_argument("set_step_guard: guard must be positive");
  std::unique_lock lock(mu_);
  step_guard_ = guard;
}

long Engine::steps_used() const {
  std::shared_lock lock(mu_);
  return steps_used_;
}

std::map<std::vector<int>, Expansion> Engine::snapshot() const {
  std::shared_lock lock(mu_);
  return memo_;
}

void Engine::absorb(const std::map<std::vector<int>, Expansion>& entries) {
  for (const auto& [key, exp] : entries) {
    Hess check{std::vector<int>(key)};  // validates the key
    for (const auto& [lam, c] : exp) {
      (void)c;
      if (lam.weight() != check.n())
        throw std::invalid_argument("absorb: partition " + lam.str() +
                                    " has wrong weight for " + check.str());
    }
  }
  std::unique_lock lock(mu_);
  for (const auto& [key, exp] : entries) memo_.emplace(key, exp);
}

Engine& Engine::shared() {
  static Engine instance;
  return instance;
}

SymFunc csf_e(const Hess& h, Engine& engine) {
  Expansion exp = engine.expand(h);
  SymFunc out(h.n(), Basis::e);
  for (const auto& [lam, c] : exp) {
    QRat coeff = c * QRat(lam.q_factorial_product());
    if (!coeff.is_polynomial())
      throw std::runtime_error("csf_e: coefficient of e_" + lam.str() + " on " +
                               h.str() + " is not polynomial: " + coeff.str());
    out.add_term(lam, coeff);
  }
  return out;
}

SymFunc csf_e(const Hess& h) { return csf_e(h, Engine::shared()); }

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

Hess replace_value(const Hess& h, int pos, int value, const char* who) {
  std::vector<int> v = h.values();
  v[pos - 1] = value;
  try {
    return Hess(std::move(v));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(who) +
                                ": constructed function is invalid: " + e.what());
  }
}

// Gaussian binomial as a rational function, defined for negative upper index
// by the product formula prod_{t=1..r} (1-q^{m-r+t})/(1-q^t). For m < 0 this
// equals (-1)^r q^{mr - r(r-1)/2} binom(r-m-1, r), a Laurent monomial times an
// ordinary q-binomial.
QRat q_binomial_signed(int m, int r) {
  if (r < 0) return QRat();
  if (m >= 0) return QRat(q_binomial(m, r));
  QPoly num = q_binomial(r - m - 1, r);
  if (r % 2 == 1) num = -num;
  const int down = -m * r + r * (r - 1) / 2;
  return QRat(std::move(num), QPoly::monomial(1, down));
}

}  // namespace

bool verify_relation_basic(const Hess& h, int i, int j) {
  const int n = h.n();
  require(1 <= i && i < j && j <= n, "verify_relation_basic: need 1 <= i < j <= n");
  require(i == 1 ? h(1) > 1 : h(i - 1) < h(i),
          "verify_relation_basic: condition (1) fails");
  require(j - 1 < h(i), "verify_relation_basic: condition (2) fails");
  for (int l = i + 1; l < j; ++l)
    require(h(l) == h(i), "verify_relation_basic: condition (2) fails");
  for (int l = 1; l <= n; ++l)
    require(h(l) < i || h(l) > j - 2, "verify_relation_basic: condition (3) fails");
  std::vector<int> v0 = h.values(), v2 = h.values();
  for (int l = i; l <= j - 1; ++l) v0[l - 1] -= 1;
  for (int l = i; l <= j - 2; ++l) v2[l - 1] -= 1;
  Hess h0{std::move(v0)}, h2{std::move(v2)};
  QRat w(q_int(j - i));
  SymFunc rhs = w * csf_e(h2) + (QRat(1) - w) * csf_e(h0);
  return csf_e(h) == rhs;
}

bool verify_relation_basic_dual(const Hess& h, int i, int a) {
  const int n = h.n();
  require(1 <= i && i <= n, "verify_relation_basic_dual: index out of range");
  require(i == 1 ? h(1) > 1 : h(i - 1) < h(i),
          "verify_relation_basic_dual: condition (1) fails");
  require(1 <= a && a < h(i), "verify_relation_basic_dual: need 1 <= a < h(i)");
  for (int l = a + 1; l <= h(i); ++l)
    require(h(l) == h(a + 1),
            "verify_relation_basic_dual: condition (2) fails (h not constant "
            "on a+1..h(i))");
  Hess h0 = replace_value(h, i, a, "verify_relation_basic_dual");
  Hess h2 = replace_value(h, i, a + 1, "verify_relation_basic_dual");
  QRat w(q_int(h(i) - a));
  SymFunc rhs = w * csf_e(h2) + (QRat(1) - w) * csf_e(h0);
  return csf_e(h) == rhs;
}

bool verify_chu_vandermonde(const Hess& h, int i, int j, int a, int b) {
  const int n = h.n();
  require(1 <= i && i < j && j <= n, "verify_chu_vandermonde: need 1 <= i < j <= n");
  require(a >= 1 && b >= 1, "verify_chu_vandermonde: need a, b >= 1");
  require(i == 1 ? h(1) > a : h(i - 1) + a <= h(i),
          "verify_chu_vandermonde: condition (1) fails");
  require(j - 1 < h(i), "verify_chu_vandermonde: condition (2) fails");
  for (int l = i + 1; l < j; ++l)
    require(h(l) == h(i), "verify_chu_vandermonde: condition (2) fails");
  require(h(j - 1) < h(j), "verify_chu_vandermonde: condition (2) fails");
  for (int l = 1; l <= n; ++l)
    require(h(l) < i || h(l) > j - 2, "verify_chu_vandermonde: condition (3) fails");
  require(b <= h(j) - h(i), "verify_chu_vandermonde: condition (4) fails");
  for (int l = h(i) - a + 1; l <= h(i) + b; ++l)
    require(h(l) == h(h(i) - a + 1),
            "verify_chu_vandermonde: condition (4) fails (h not constant on "
            "h(i)-a+1..h(i)+b)");

  const int l = j - i;
  SymFunc lhs = QRat(q_binomial(a + b, a)) * csf_e(h);
  SymFunc rhs(n, Basis::e);
  for (int k = 0; k <= std::min(a, l); ++k) {
    QRat coeff = q_binomial_signed(a + b - l, a - k) * QRat(q_binomial(l, k));
    if (coeff.is_zero()) continue;
    coeff = QRat(QPoly::monomial(1, (a - k) * (l - k))) * coeff;
    std::vector<int> v = h.values();
    for (int t = i; t <= j - 1 - k; ++t) v[t - 1] -= a;
    for (int t = j - k; t <= j - 1; ++t) v[t - 1] += b;
    Hess hk = [&]() {
      try {
        return Hess(std::move(v));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(
            std::string("verify_chu_vandermonde: constructed function for k=") +
            std::to_string(k) + " is invalid: " + e.what());
      }
    }();
    rhs = rhs + coeff * csf_e(hk);
  }
  return lhs == rhs;
}

}  // namespace chromod
