#include "chromod/qhit.hpp"

#include "chromod/engine.hpp"
#include "doctest.h"

#include <functional>
#include <vector>

using namespace chromod;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

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

bool unimodal_coeffs(const QPoly& p) {
  const auto& c = p.coeffs();
  size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  return i + 1 >= c.size();
}

}  // namespace

TEST_CASE("board geometry and fit validation") {
  BoardShape shape(P({4, 3, 2, 2}), 6);
  // top row holds the first part
  CHECK(shape.in_lambda(6, 4));
  CHECK_FALSE(shape.in_lambda(6, 5));
  CHECK(shape.in_lambda(5, 3));
  CHECK_FALSE(shape.in_lambda(5, 4));
  CHECK(shape.in_lambda(3, 2));
  CHECK_FALSE(shape.in_lambda(2, 1));
  CHECK_FALSE(shape.in_lambda(1, 1));
  CHECK_THROWS_AS(shape.in_lambda(0, 1), std::out_of_range);
  CHECK_THROWS_AS(shape.in_lambda(1, 7), std::out_of_range);
  CHECK_THROWS_AS(BoardShape(P({3}), 2), std::invalid_argument);
  CHECK_THROWS_AS(BoardShape(P({1, 1, 1}), 2), std::invalid_argument);
  CHECK_NOTHROW(BoardShape(Partition(), 0));
}

TEST_CASE("lambda-weight of the six-rook reference placement") {
  BoardShape shape(P({4, 3, 2, 2}), 6);
  RookPlacement sigma{{5, 3, 1, 6, 4, 2}};
  CHECK(lambda_weight(sigma, shape) == 12);
  // three rooks sit inside the diagram
  int inside = 0;
  for (int col = 1; col <= 6; ++col)
    inside += shape.in_lambda(sigma.perm[col - 1], col) ? 1 : 0;
  CHECK(inside == 3);
}

TEST_CASE("lambda-weight validates the placement") {
  BoardShape shape(P({1}), 2);
  CHECK_THROWS_AS(lambda_weight(RookPlacement{{1}}, shape),
                  std::invalid_argument);
  CHECK_THROWS_AS(lambda_weight(RookPlacement{{1, 1}}, shape),
                  std::invalid_argument);
  CHECK_THROWS_AS(lambda_weight(RookPlacement{{0, 2}}, shape),
                  std::invalid_argument);
  CHECK_NOTHROW(lambda_weight(RookPlacement{{2, 1}}, shape));
}

TEST_CASE("small q-hit values") {
  CHECK(q_hit_number(0, 0, Partition()) == QPoly(1));
  CHECK(q_hit_number(0, 1, Partition()) == QPoly(1));
  CHECK(q_hit_number(1, 1, P({1})) == QPoly(1));
  CHECK(q_hit_number(0, 2, Partition()) == q_factorial(2));
  CHECK(q_hit_number(0, 2, P({1})) == QPoly(1));
  CHECK(q_hit_number(1, 2, P({1})) == QPoly::monomial(1, 1));
  CHECK(q_hit_number(2, 2, P({1})).is_zero());
  for (int m = 1; m <= 5; ++m) {
    std::vector<int> square(m, m);
    CHECK(q_hit_number(m, m, P(square)) == q_factorial(m));
  }
  CHECK_THROWS_AS(q_hit_number(-1, 2, Partition()), std::invalid_argument);
  CHECK_THROWS_AS(q_hit_number(3, 2, Partition()), std::invalid_argument);
  CHECK_THROWS_AS(q_hit_number(0, 2, P({3})), std::invalid_argument);
}

TEST_CASE("q-hit numbers sum to m!_q over all hit counts") {
  for (int m = 1; m <= 4; ++m)
    for (const auto& lam : partitions_in_board(m)) {
      QPoly total;
      for (int j = 0; j <= m; ++j) total += q_hit_number(j, m, lam);
      CHECK(total == q_factorial(m));
    }
}

TEST_CASE("enumeration guard trips at nine rooks unless overridden") {
  CHECK_THROWS_AS(q_hit_number(0, 9, Partition()), std::invalid_argument);
  CHECK(q_hit_number(0, 9, Partition(), true) == q_factorial(9));
}

TEST_CASE("transpose symmetry of q-hit numbers") {
  for (int m = 1; m <= 5; ++m)
    for (const auto& lam : partitions_in_board(m)) {
      const Partition t = lam.transposed();
      for (int j = 0; j <= m; ++j)
        CHECK(q_hit_number(j, m, lam) == q_hit_number(j, m, t));
    }
}

TEST_CASE("board-shrinking recurrence for extreme hit counts") {
  // R_{j,m} = ([m]_q - [j]_q) R_{j,m-1} when j is the diagram height and the
  // width stays under m, or j is the width and the height stays under m
  int checked = 0;
  for (int m = 2; m <= 5; ++m)
    for (const auto& lam : partitions_in_board(m)) {
      if (lam.part(1) > m - 1 || lam.length() > m - 1) continue;
      for (int j : {lam.length(), lam.part(1)}) {
        QPoly lhs = q_hit_number(j, m, lam);
        QPoly rhs = (q_int(m) - q_int(j)) * q_hit_number(j, m - 1, lam);
        CHECK(lhs == rhs);
        ++checked;
      }
    }
  // two branch checks per partition fitting strictly inside the board
  CHECK(checked == 2 * (2 + 6 + 20 + 70));
}

TEST_CASE("corner exchange relation") {
  // removing and adding the corner cell of part i ties three boards together,
  // with q on the added-cell side
  int checked = 0;
  for (int m = 2; m <= 5; ++m)
    for (const auto& lam : partitions_in_board(m)) {
      for (int i = 1; i <= lam.length(); ++i) {
        const int prev = (i == 1) ? m + 1 : lam.part(i - 1);
        if (!(lam.part(i + 1) < lam.part(i) && lam.part(i) < prev)) continue;
        if (lam.part(i) + 1 > m) continue;  // grown diagram must still fit
        std::vector<int> up, down;
        for (int t = 1; t <= lam.length(); ++t) {
          down.push_back(lam.part(t) - (t == i ? 1 : 0));
          up.push_back(lam.part(t) + (t == i ? 1 : 0));
        }
        const Partition mu = Partition::from_multiset(down);
        const Partition sigma = Partition::from_multiset(up);
        for (int j = 0; j <= m; ++j) {
          const QPoly lhs = q_int(2) * q_hit_number(j, m, lam);
          CHECK(lhs == QPoly::monomial(1, 1) * q_hit_number(j, m, sigma) +
                           q_hit_number(j, m, mu));
          const QPoly lhs_t = q_int(2) * q_hit_number(j, m, lam.transposed());
          CHECK(lhs_t ==
                QPoly::monomial(1, 1) *
                        q_hit_number(j, m, sigma.transposed()) +
                    q_hit_number(j, m, mu.transposed()));
        }
        ++checked;
      }
    }
  CHECK(checked > 50);
}

TEST_CASE("unimodal coefficient sequences") {
  for (int m = 1; m <= 5; ++m)
    for (const auto& lam : partitions_in_board(m))
      for (int j = 0; j <= m; ++j) {
        const QPoly r = q_hit_number(j, m, lam);
        if (r.is_zero()) continue;
        CHECK_MESSAGE(unimodal_coeffs(r), "R_{", j, ",", m, "}(", lam.str(),
                      ") = ", r.str());
      }
}

TEST_CASE("partition attached to a Hessenberg function") {
  CHECK(hess_partition(Hess::complete(4)) == Partition());
  CHECK(hess_partition(Hess({1, 2, 3})) == P({2, 1}));
  CHECK(hess_partition(Hess({2, 3, 3})) == P({1}));
  CHECK(hess_partition(Hess({2, 2, 5, 5, 5})) == P({2, 2, 2}));
  CHECK(hess_partition(Hess({3, 5, 5, 6, 6, 6})) == P({3, 1, 1}));
}

TEST_CASE("hit coefficients of complete products") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{
           {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}, {4, 8}}) {
    const Hess h = Hess::complete(m) * Hess::complete(n - m);
    for (int j = 0; 2 * j <= n; ++j) {
      if (j == m)
        CHECK(hit_coefficient(j, h) == q_factorial(n - m));
      else
        CHECK(hit_coefficient(j, h).is_zero());
    }
  }
  for (int n = 1; n <= 6; ++n)
    CHECK(hit_coefficient(0, Hess::complete(n)) == q_factorial(n));
}

TEST_CASE("hit coefficient argument validation") {
  const Hess h({2, 3, 3});
  CHECK_THROWS_AS(hit_coefficient(-1, h), std::invalid_argument);
  CHECK_THROWS_AS(hit_coefficient(2, h), std::invalid_argument);
  CHECK_THROWS_AS(hit_coefficient(0, Hess({2, 4, 4, 5, 5})),
                  std::invalid_argument);
  CHECK_THROWS_AS(csf_abelian_qhit(Hess({2, 4, 4, 5, 5})),
                  std::invalid_argument);
}

TEST_CASE("two-part expansion on small abelian paths") {
  SymFunc f = csf_abelian_qhit(Hess({2, 3, 3}));
  CHECK(f.coefficient(P({2, 1})) == QRat(QPoly::monomial(1, 1)));
  CHECK(f.coefficient(P({3})) == QRat(q_int(3)));
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 5}, {3, 6}}) {
    const Hess h = Hess::complete(m) * Hess::complete(n - m);
    SymFunc g = csf_abelian_qhit(h);
    CHECK(g.coefficient(P({n - m, m})) ==
          QRat(q_factorial(m) * q_factorial(n - m)));
  }
}

TEST_CASE("two-part expansion matches the reduction engine") {
  for (int n = 1; n <= 6; ++n) {
    for_each_hess(n, [&](const Hess& h) {
      if (!h.is_abelian()) return;
      CHECK(csf_abelian_qhit(h) == csf_e(h));
    });
  }
  CHECK(csf_abelian_qhit(Hess({3, 5, 5, 6, 6, 6})) ==
        csf_e(Hess({3, 5, 5, 6, 6, 6})));
}
