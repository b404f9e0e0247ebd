#include "chromod/engine.hpp"

#include "chromod/oracle.hpp"
#include "doctest.h"

#include <set>

using namespace chromod;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// palindromic when read against the degree window [0, window]
bool palindromic_in_window(const QPoly& p, int window) {
  if (p.is_zero()) return true;
  if (p.degree() > window) return false;
  for (int d = 0; d <= window; ++d)
    if (p.coeff(d) != p.coeff(window - d)) return false;
  return true;
}

int edge_count(const Hess& h) {
  int e = 0;
  for (int i = 1; i <= h.n(); ++i) e += h(i) - i;
  return e;
}

mpz_class chromatic_value(const Hess& h, int k) {
  mpz_class r(1);
  for (int i = 1; i <= h.n(); ++i) r *= mpz_class(k - (h(i) - i));
  return r;
}

}  // namespace

TEST_CASE("relation conditions on small examples") {
  Hess h({2, 4, 4, 5, 5});
  CHECK(check_relation_conditions(h, 1, 2, 1));
  CHECK_FALSE(check_relation_conditions(h, 2, 3, 1));

  // complete paths never satisfy condition (2)
  for (int n = 2; n <= 5; ++n) {
    Hess k = Hess::complete(n);
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int b = 1; b <= n; ++b) CHECK_FALSE(check_relation_conditions(k, i, j, b));
  }

  CHECK_THROWS_AS(check_relation_conditions(h, 0, 2, 1), std::out_of_range);
  CHECK_THROWS_AS(check_relation_conditions(h, 2, 2, 1), std::out_of_range);
  CHECK_THROWS_AS(check_relation_conditions(h, 1, 2, 0), std::out_of_range);
}

TEST_CASE("applying the relation builds the two children") {
  Step st = apply_relation(Hess({2, 4, 4, 5, 5}), 1, 2, 1);
  CHECK(st.h0 == Hess({1, 4, 4, 5, 5}));
  CHECK(st.h2 == Hess({3, 4, 4, 5, 5}));
  CHECK(st.coeff_h2 == QRat(QPoly(1), q_int(2)));
  CHECK(st.coeff_h0 == QRat(QPoly::monomial(1, 1), q_int(2)));
  CHECK(st.coeff_h0 + st.coeff_h2 == QRat(1));

  // b+1 = j-i collapses the h0 term
  Step degenerate = apply_relation(Hess({3, 3, 4, 4}), 1, 3, 1);
  CHECK(degenerate.coeff_h0.is_zero());
  CHECK(degenerate.coeff_h2 == QRat(1));
  CHECK(degenerate.h2 == Hess({2, 4, 4, 4}));
  CHECK(degenerate.h0 == Hess({2, 2, 4, 4}));

  CHECK_THROWS_WITH_AS(apply_relation(Hess::complete(3), 1, 2, 1),
                       doctest::Contains("condition (2)"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(apply_relation(Hess({1, 2, 3}), 1, 2, 1),
                       doctest::Contains("condition (1)"), std::invalid_argument);
}

TEST_CASE("non-aligned chooser") {
  NonAlignedChoice c = choose_step_nonaligned(Hess({2, 4, 4, 5, 5}));
  CHECK(c.i == 1);
  CHECK(c.j == 2);
  CHECK(c.b == 1);

  CHECK_THROWS_AS(choose_step_nonaligned(Hess({2, 3, 3})), std::invalid_argument);
  CHECK_THROWS_AS(choose_step_nonaligned(Hess::complete(4)), std::invalid_argument);

  // chosen triples satisfy the relation conditions on every non-aligned h
  for (int n = 4; n <= 7; ++n)
    for_each_hess(n, [](const Hess& h) {
      if (h.is_aligned()) return;
      NonAlignedChoice t = choose_step_nonaligned(h);
      CHECK(check_relation_conditions(h, t.i, t.j, t.b));
    });
}

TEST_CASE("aligned chooser") {
  AlignedChoice a = choose_step_aligned(Hess({3, 5, 5, 6, 6, 6}));
  CHECK(a.component == 0);
  CHECK(a.i == 2);
  CHECK(a.j == 4);
  CHECK(a.b == 1);

  AlignedChoice p3 = choose_step_aligned(Hess({2, 3, 3}));
  CHECK(p3.i == 1);
  CHECK(p3.j == 2);
  CHECK(p3.b == 1);

  // second component of k_1 * (2,2,3,3)-shape; children match the split of
  // (1,4,4,5,5) into (1,3,3,5,5) and (1,3,5,5,5)
  AlignedChoice mid = choose_step_aligned(Hess({1, 4, 4, 5, 5}));
  CHECK(mid.component == 1);
  CHECK(mid.i == 2);
  CHECK(mid.j == 4);
  CHECK(mid.b == 1);
  Step st = apply_relation(Hess({1, 4, 4, 5, 5}), mid.i, mid.j, mid.b);
  CHECK(st.h0 == Hess({1, 3, 3, 5, 5}));
  CHECK(st.h2 == Hess({1, 3, 5, 5, 5}));

  CHECK_THROWS_AS(choose_step_aligned(Hess::complete(4)), std::invalid_argument);
  CHECK_THROWS_AS(choose_step_aligned(Hess({2, 2, 4, 4, 5, 6})), std::invalid_argument);
  CHECK_THROWS_AS(choose_step_aligned(Hess({2, 4, 4, 5, 5})), std::invalid_argument);

  for (int n = 4; n <= 7; ++n)
    for_each_hess(n, [](const Hess& h) {
      if (!h.is_aligned() || h.as_complete_product()) return;
      AlignedChoice t = choose_step_aligned(h);
      CHECK(check_relation_conditions(h, t.i, t.j, t.b));
    });
}

TEST_CASE("expansion base cases and the three-vertex path") {
  Engine eng;
  Expansion k3 = eng.expand(Hess::complete(3));
  CHECK(k3 == Expansion{{P({3}), QRat(1)}});

  Expansion empty_graph = eng.expand(Hess({1, 2, 3}));
  CHECK(empty_graph == Expansion{{P({1, 1, 1}), QRat(1)}});

  Expansion p3 = eng.expand(Hess({2, 3, 3}));
  CHECK(p3 == Expansion{{P({3}), QRat(QPoly(1), q_int(2))},
                        {P({2, 1}), QRat(QPoly::monomial(1, 1), q_int(2))}});

  // reordered complete products share one memo entry
  Expansion a = eng.expand(Hess({2, 2, 5, 5, 5}));
  Expansion b = eng.expand(Hess({3, 3, 3, 5, 5}));
  CHECK(a == b);
  CHECK(a == Expansion{{P({3, 2}), QRat(1)}});
}

TEST_CASE("expansion coefficients sum to one") {
  Engine eng;
  for (int n = 1; n <= 6; ++n)
    for_each_hess(n, [&](const Hess& h) {
      QRat total;
      for (const auto& [lam, c] : eng.expand(h)) total += c;
      CHECK(total == QRat(1));
    });
}

TEST_CASE("evaluate plugs base values into an expansion") {
  Engine eng;
  Expansion p3 = eng.expand(Hess({2, 3, 3}));

  std::map<Partition, QRat> ones;
  for (const Partition& lam : partitions_of(3)) ones[lam] = QRat(1);
  CHECK(evaluate(p3, ones) == QRat(1));

  std::map<Partition, SymFunc> csf_base;
  for (const Partition& lam : partitions_of(3)) {
    SymFunc e(3, Basis::e);
    e.add_term(lam, QRat(lam.q_factorial_product()));
    csf_base.emplace(lam, e);
  }
  SymFunc expect(3, Basis::e);
  expect.add_term(P({2, 1}), QRat(QPoly::monomial(1, 1)));
  expect.add_term(P({3}), QRat(q_int(3)));
  CHECK(evaluate(p3, csf_base) == expect);

  std::map<Partition, QRat> missing{{P({3}), QRat(1)}};
  CHECK_THROWS_WITH_AS(evaluate(p3, missing), doctest::Contains("(2,1)"),
                       std::invalid_argument);
  CHECK_THROWS_AS(evaluate(Expansion{}, ones), std::invalid_argument);
}

TEST_CASE("csf_e matches hand values and the oracle") {
  CHECK(csf_e(Hess::complete(4)) ==
        SymFunc(4, Basis::e, {{P({4}), QRat(q_factorial(4))}}));
  CHECK(csf_e(Hess({2, 3, 3})) ==
        SymFunc(3, Basis::e, {{P({2, 1}), QRat(QPoly::monomial(1, 1))},
                              {P({3}), QRat(q_int(3))}}));
  CHECK(csf_e(Hess({2, 4, 4, 5, 5})) != csf_e(Hess({3, 3, 4, 5, 5})));

  for (int n = 1; n <= 6; ++n)
    for_each_hess(n, [](const Hess& h) {
      CHECK(csf_e(h) == csf_oracle(h).converted(Basis::e));
    });
}

TEST_CASE("the expansion is invariant under transposition") {
  Engine eng;
  for (int n = 1; n <= 6; ++n)
    for_each_hess(n, [&](const Hess& h) {
      CHECK(eng.expand(h) == eng.expand(h.transposed()));
    });
}

TEST_CASE("e-coefficients are palindromic around half the edge count") {
  for (int n = 1; n <= 6; ++n)
    for_each_hess(n, [](const Hess& h) {
      int window = edge_count(h);
      SymFunc f = csf_e(h);
      for (const auto& [lam, c] : f.coeffs()) {
        auto poly = c.is_polynomial();
        REQUIRE(poly.has_value());
        CHECK(palindromic_in_window(*poly, window));
      }
    });
}

TEST_CASE("q=1 specialization recovers the chromatic polynomial") {
  for (int n = 1; n <= 5; ++n)
    for_each_hess(n, [n](const Hess& h) {
      SymFunc f = csf_e(h);
      for (int x = 0; x <= n; ++x)
        CHECK(eval_ones(f, x) == mpq_class(chromatic_value(h, x)));
    });
}

TEST_CASE("abelian functions with rearranged area sequences agree") {
  for (int n = 4; n <= 6; ++n) {
    std::map<std::vector<int>, std::vector<Hess>> groups;
    for_each_hess(n, [&](const Hess& h) {
      if (!h.is_abelian()) return;
      std::vector<int> key = h.area_sequence();
      std::sort(key.begin(), key.end());
      groups[key].push_back(h);
    });
    for (const auto& [key, members] : groups)
      for (size_t t = 1; t < members.size(); ++t)
        CHECK(csf_e(members[0]) == csf_e(members[t]));
  }
}

TEST_CASE("multiplicative shortcut agrees with the plain expansion") {
  Engine eng;
  for (int n = 1; n <= 6; ++n)
    for_each_hess(n, [&](const Hess& h) {
      CHECK(eng.expand_multiplicative(h) == eng.expand(h));
    });
}

TEST_CASE("termination within the step guard") {
  Engine eng;
  for (int n = 7; n <= 8; ++n)
    for_each_hess(n, [&](const Hess& h) { CHECK_NOTHROW(eng.expand(h)); });
  CHECK(eng.steps_used() > 0);
}

TEST_CASE("a tiny step guard trips loudly") {
  Engine eng;
  eng.set_step_guard(1);
  CHECK_THROWS_AS(eng.expand(Hess({2, 4, 4, 5, 5})), std::runtime_error);
  CHECK_THROWS_AS(eng.set_step_guard(0), std::invalid_argument);
  eng.set_step_guard(10000000);
  CHECK_NOTHROW(eng.expand(Hess({2, 4, 4, 5, 5})));
}

TEST_CASE("snapshot and absorb move memo entries between engines") {
  Engine a;
  Expansion want = a.expand(Hess({2, 4, 4, 5, 5}));
  auto memo = a.snapshot();
  CHECK(memo.count({2, 4, 4, 5, 5}) == 1);

  Engine b;
  b.absorb(memo);
  CHECK(b.expand(Hess({2, 4, 4, 5, 5})) == want);
  CHECK(b.steps_used() == 0);  // everything came from the memo

  std::map<std::vector<int>, Expansion> junk{
      {{3, 2, 3}, Expansion{{P({3}), QRat(1)}}}};
  CHECK_THROWS_AS(b.absorb(junk), std::invalid_argument);
  std::map<std::vector<int>, Expansion> misweighted{
      {{2, 2}, Expansion{{P({3}), QRat(1)}}}};
  CHECK_THROWS_AS(b.absorb(misweighted), std::invalid_argument);
}

TEST_CASE("simpler relation families hold for csf") {
  // every hypothesis-satisfying instance checks out
  int basic_seen = 0, dual_seen = 0;
  for (int n = 2; n <= 5; ++n)
    for_each_hess(n, [&](const Hess& h) {
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          bool ok;
          try {
            ok = verify_relation_basic(h, i, j);
          } catch (const std::invalid_argument&) {
            continue;
          }
          CHECK(ok);
          ++basic_seen;
        }
        for (int a = 1; a <= n; ++a) {
          bool ok;
          try {
            ok = verify_relation_basic_dual(h, i, a);
          } catch (const std::invalid_argument&) {
            continue;
          }
          CHECK(ok);
          ++dual_seen;
        }
      }
    });
  CHECK(basic_seen > 20);
  CHECK(dual_seen > 20);

  // complete paths admit the basic relation even without a strict rise at j
  CHECK(verify_relation_basic(Hess::complete(3), 1, 3));
  CHECK_THROWS_AS(verify_relation_basic(Hess({1, 2, 3}), 1, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_relation_basic_dual(Hess({1, 2, 3}), 2, 1),
                  std::invalid_argument);
}

TEST_CASE("the q-Vandermonde relation holds for csf") {
  int seen = 0;
  for (int n = 3; n <= 6; ++n)
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
              CHECK(ok);
              ++seen;
            }
    });
  CHECK(seen > 50);
  // instances with a > 1 must be among them, or the test is vacuous
  bool deep = false;
  for_each_hess(5, [&](const Hess& h) {
    for (int i = 1; i <= 5 && !deep; ++i)
      for (int j = i + 1; j <= 5 && !deep; ++j)
        for (int b = 1; b <= 3 && !deep; ++b) {
          try {
            verify_chu_vandermonde(h, i, j, 2, b);
            deep = true;
          } catch (const std::invalid_argument&) {
          }
        }
  });
  CHECK(deep);
}
