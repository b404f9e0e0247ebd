#include "chromod/qhit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace chromod {

BoardShape::BoardShape(Partition lambda, int m)
    : lambda_(std::move(lambda)), m_(m) {
  if (m_ < 0) throw std::invalid_argument("BoardShape: negative board size");
  if (lambda_.part(1) > m_ || lambda_.length() > m_)
    throw std::invalid_argument("BoardShape: " + lambda_.str() +
                                " does not fit in a " + std::to_string(m_) +
                                "x" + std::to_string(m_) + " board");
}

bool BoardShape::in_lambda(int row, int col) const {
  if (row < 1 || row > m_ || col < 1 || col > m_)
    throw std::out_of_range("BoardShape: cell (" + std::to_string(row) + "," +
                            std::to_string(col) + ") is outside the board");
  return col <= lambda_.part(m_ + 1 - row);
}

int lambda_weight(const RookPlacement& sigma, const BoardShape& shape) {
  const int m = shape.m();
  if (static_cast<int>(sigma.perm.size()) != m)
    throw std::invalid_argument(
        "lambda_weight: placement size does not match the board");
  std::vector<char> seen(m + 1, 0);
  for (int r : sigma.perm) {
    if (r < 1 || r > m || seen[r])
      throw std::invalid_argument(
          "lambda_weight: placement is not a permutation of 1.." +
          std::to_string(m));
    seen[r] = 1;
  }
  const int lam1 = shape.lambda().part(1);
  int count = 0;
  for (int col = 1; col <= m; ++col) {
    const int rook_row = sigma.perm[col - 1];
    const bool rook_in = shape.in_lambda(rook_row, col);
    for (int row = 1; row <= m; ++row) {
      if (row == rook_row) continue;
      bool blocked = false;
      for (int c = 1; c < col && !blocked; ++c)
        blocked = sigma.perm[c - 1] == row;
      if (blocked) continue;
      bool counts;
      if (shape.in_lambda(row, col))
        counts = rook_in && rook_row < row;
      else if (col <= lam1)
        counts = rook_in || rook_row < row;
      else
        counts = rook_row > row;
      if (counts) ++count;
    }
  }
  return count;
}

QPoly q_hit_number(int j, int m, const Partition& lambda, bool unsafe) {
  if (j < 0 || j > m)
    throw std::invalid_argument("q_hit_number: need 0 <= j <= m");
  BoardShape shape(lambda, m);
  if (m > 8 && !unsafe)
    throw std::invalid_argument(
        "q_hit_number: board size " + std::to_string(m) +
        " exceeds the enumeration guard of 8; pass unsafe to override");
  if (m == 0) return QPoly(1);
  std::map<int, mpz_class> hist;
  RookPlacement sigma;
  sigma.perm.resize(m);
  std::iota(sigma.perm.begin(), sigma.perm.end(), 1);
  do {
    int inside = 0;
    for (int col = 1; col <= m; ++col)
      inside += shape.in_lambda(sigma.perm[col - 1], col) ? 1 : 0;
    if (inside == j) hist[lambda_weight(sigma, shape)] += 1;
  } while (std::next_permutation(sigma.perm.begin(), sigma.perm.end()));
  QPoly out;
  for (const auto& [deg, c] : hist) out += QPoly::monomial(c, deg);
  return out;
}

Partition hess_partition(const Hess& h) {
  std::vector<int> cols;
  for (int i = 1; i <= h.n(); ++i) cols.push_back(h.n() - h(i));
  return Partition::from_multiset(std::move(cols)).transposed();
}

QPoly hit_coefficient(int j, const Hess& h, bool unsafe) {
  if (!h.is_abelian())
    throw std::invalid_argument("hit_coefficient: " + h.str() +
                                " is not abelian");
  const int n = h.n();
  if (j < 0 || 2 * j > n)
    throw std::invalid_argument("hit_coefficient: need 0 <= j <= n/2");
  const Partition lambda = hess_partition(h);
  const int width = lambda.part(1);
  const int height = lambda.length();
  if ((width == j && height == n - j) || (width == n - j && height == j))
    return q_hit_number(j, n - j, lambda, unsafe);
  if (j <= width && width <= n - j - 1 && height <= n - j - 1)
    return QPoly::monomial(1, j) * q_int(n - 2 * j) *
           q_hit_number(j, n - j - 1, lambda, unsafe);
  return QPoly();
}

SymFunc csf_abelian_qhit(const Hess& h, bool unsafe) {
  if (!h.is_abelian())
    throw std::invalid_argument("csf_abelian_qhit: " + h.str() +
                                " is not abelian");
  const int n = h.n();
  SymFunc out(n, Basis::e);
  for (int j = 0; 2 * j <= n; ++j) {
    QPoly c = q_factorial(j) * hit_coefficient(j, h, unsafe);
    if (c.is_zero()) continue;
    std::vector<int> parts{n - j};
    if (j > 0) parts.push_back(j);
    out.add_term(Partition(std::move(parts)), QRat(std::move(c)));
  }
  return out;
}

}  // namespace chromod
