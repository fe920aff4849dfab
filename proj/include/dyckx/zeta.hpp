#pragma once

#include "dyckx/genfun.hpp"
#include "dyckx/kernel.hpp"
#include "dyckx/series.hpp"

#include <cstdint>
#include <stdexcept>

namespace dyckx {

// Zeta function of the subshift stratified by the multiplier class of the
// periodic points. Neutral points belong to both one-sided factors, so
// total * neutral == nonPositive * nonNegative.
struct ZetaParts {
  Series neutral, nonPositive, nonNegative, total;
};

// Matrix-order variants of the determinant factors (the derived defaults pass
// the census oracle; the alternatives are kept for comparison).
struct ZetaVariant {
  bool minusFactorGA = true;  // det(1 - zA^- - GA) vs det(1 - zA^- - AG)
  bool plusFactorAG = true;   // det(1 - zA^+ - AG) vs det(1 - zA^+ - GA)
};

// Zeta function of a circular Markov code with weight matrix H (entry (U, W)
// holds the generating function of code words leading U -> W):
// det(1 - H)^{-1}. H must have zero constant term.
Series markov_zeta(const SeriesMatrix& H);

// Determinant formulas, with G the diagonal excursion matrix of the spec:
//   neutral     = det(1 - GA)^{-1}
//   nonPositive = det(1 - zA^- - GA)^{-1}
//   nonNegative = det(1 - zA^+ - AG)^{-1}
//   total       = nonPositive * nonNegative * det(1 - GA)
ZetaParts zeta_parts(const SubshiftSpec& spec, int order = Series::kDefaultOrder,
                     ZetaVariant variant = {});

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Counts of n-periodic points (sequences, not orbits) for n = 1..n_max,
// stratified by best multiplier class over rotations. Neutral points are
// counted inside both one-sided rows, so total = nonPositive + nonNegative -
// neutral. Index 0 of each vector is unused.
struct PeriodicCensus {
  int n_max = 0;
  std::vector<long long> total, nonPositive, nonNegative, neutral;
};

// Exhaustive census by depth-first search with height/zero-product pruning.
// Throws BudgetExceeded when the explored node count passes node_budget.
PeriodicCensus periodic_census(const SubshiftSpec& spec, int n_max,
                               std::uint64_t node_budget = 1'000'000'000);

// exp(sum_n count(n) z^n / n) for each census row: the ground-truth zeta
// factors, exact through z^{n_max}.
ZetaParts oracle_parts(const PeriodicCensus& census);

// Ground-truth total zeta through z^{n_max}.
Series zeta_oracle(const SubshiftSpec& spec, int n_max);

}  // namespace dyckx
