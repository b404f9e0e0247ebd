// Exhaustive identity suites behind the `verify` subcommand: each suite
// replays one relation or theorem over every admissible instance up to a
// size bound and reports how many instances were checked.
#pragma once

#include <string>
#include <vector>

namespace chromod {

struct SuiteResult {
  std::string name;
  long checked = 0;    // admissible instances examined
  long failed = 0;     // instances where the identity did not hold
  std::string detail;  // first failing instance, empty when none
  bool passed() const { return failed == 0; }
};

// Suite names in execution order:
//   basicrel      f(h1) = [j-i] f(h2) + (1 - [j-i]) f(h0), all h and (i, j)
//   basicreldual  the dual one-column relation, all h and (i, a)
//   cv            the q-Vandermonde relation, all h and small (i, j, a, b)
//   rjm           board-shrinking recurrence for extreme hit counts
//   rjrel         corner exchange relation for q-hit numbers
//   qhit-thm      csf_abelian_qhit(h) = csf_e(h), abelian h
//   network-eq    network_expansion(h) = expand(h), abelian h
//   transpose     csf_e(h) = csf_e(transpose of h), all h
//   palindromic   e-coefficients palindromic about half the area, all h
//   alpha-chi     alpha(csf_e(h)) = prod_i (x - [h(i)-i]), all h
const std::vector<std::string>& verify_suite_names();

// Run one suite with sizes up to max_n; rook boards are capped at 5, and
// qhit-thm at 8, whatever the bound.  Unknown names and max_n outside
// [1, 14] throw std::invalid_argument.
SuiteResult run_verify_suite(const std::string& name, int max_n);

// every suite at the same bound, in listed order
std::vector<SuiteResult> run_all_verify_suites(int max_n);

}  // namespace chromod
