#pragma once

#include "dyckx/kernel.hpp"
#include "dyckx/series.hpp"

namespace dyckx {

// Excursion-count generating functions g_n (one per bracket class) and the
// diagonal matrix G = diag(g_0, ..., g_{N-1}).
struct GenFunSolution {
  std::vector<Series> g;
  SeriesMatrix G;
};

// Solves the first-return system
//   g_n = z^2 ( M_n + (A^- (1 - G A)^{-1} G A^+)_{n,n} )
// degree by degree (the z^2 prefactor makes each degree of the right side
// depend only on lower degrees of g). Coefficients count excursions: words
// that start with an opener of class n, end balanced, and stay strictly
// above height zero at interior even positions.
GenFunSolution solve_genfun(const SubshiftSpec& spec, int order = Series::kDefaultOrder);

// Same system for arbitrary (possibly signed) integer matrices; used for the
// algebraic identity checks where inputs need not be valid subshift data.
std::vector<Series> solve_genfun_matrices(const std::vector<int>& M,
                                          const std::vector<std::vector<long long>>& Aminus,
                                          const std::vector<std::vector<long long>>& A,
                                          const std::vector<std::vector<long long>>& Aplus,
                                          int order);

// Exhaustive count of excursions of the given even length whose first symbol
// is the opener (n, 1): locally admissible, height returns to zero exactly at
// the end, and partial height sums at interior even positions stay positive.
// The count is independent of the first symbol's copy index.
long long count_code_words(const SubshiftSpec& spec, int n, int length);

// Closed form for the constant-parameter case: all copy counts equal M and the
// three matrices are constant K^-, K, K^+ (each <= M), alphabet classes N.
// For K > 0:
//   g = [1 + (MK - K^-K^+)N z^2 - sqrt((1 + (MK - K^-K^+)N z^2)^2 - 4MKN z^2)] / (2KN)
// For K = 0 the quadratic degenerates and the linear solution is
//   g = M z^2 / (1 - K^-K^+ N z^2).
Series uniform_genfun(int M, int Kminus, int K, int Kplus, int N,
                      int order = Series::kDefaultOrder);

// The quadratic residual NK g^2 - (1 + (MK - K^-K^+)N z^2) g + M z^2, which
// must vanish identically when g solves the constant-parameter system.
Series uniform_genfun_residual(const Series& g, int M, int Kminus, int K, int Kplus, int N);

}  // namespace dyckx
