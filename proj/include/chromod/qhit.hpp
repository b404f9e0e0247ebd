// Garsia-Remmel q-hit numbers: Dworkin-weighted rook placements on a square
// board carrying a Young diagram, and the two-part elementary expansion they
// give for abelian Hessenberg functions.
#pragma once

#include "chromod/dyck.hpp"
#include "chromod/symfunc.hpp"

#include <vector>

namespace chromod {

// m non-attacking rooks on the m x m board: the rook in column c occupies row
// perm[c-1]. Rows are numbered bottom to top.
struct RookPlacement {
  std::vector<int> perm;
};

// The m x m board with the Young diagram of lambda in its top-left corner:
// cell (row, col) lies in the diagram iff col <= lambda_{m+1-row}.
class BoardShape {
public:
  // throws if the diagram does not fit in the board
  BoardShape(Partition lambda, int m);
  int m() const { return m_; }
  const Partition& lambda() const { return lambda_; }
  bool in_lambda(int row, int col) const;

private:
  Partition lambda_;
  int m_;
};

// Number of cells e carrying no rook and with no rook to their left whose
// column rook passes the position test: for e in the diagram the rook must lie
// in the diagram below e; for e outside the diagram in a column meeting the
// diagram it must lie in the diagram or below e; in a column right of the
// diagram it must lie above e.
int lambda_weight(const RookPlacement& sigma, const BoardShape& shape);

// R_{j,m}(lambda): sum of q^{lambda_weight} over placements of m rooks with
// exactly j of them in the diagram. Enumerates all m! permutations; guarded
// to m <= 8 unless unsafe is set.
QPoly q_hit_number(int j, int m, const Partition& lambda, bool unsafe = false);

// The partition attached to h: its transpose has parts n - h(i).
Partition hess_partition(const Hess& h);

// b_j(h) for abelian h and 0 <= 2j <= n, with lambda = hess_partition(h):
// R_{j,n-j}(lambda) when {lambda_1, len(lambda)} = {j, n-j}; otherwise
// q^j [n-2j]_q R_{j,n-j-1}(lambda) when j <= lambda_1 and the diagram fits
// the smaller board; otherwise zero.
QPoly hit_coefficient(int j, const Hess& h, bool unsafe = false);

// sum over 2j <= n of j!_q b_j(h) e_{(n-j,j)}; equals csf_e(h) for abelian h.
SymFunc csf_abelian_qhit(const Hess& h, bool unsafe = false);

}  // namespace chromod
