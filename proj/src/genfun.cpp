#include "dyckx/genfun.hpp"

#include <stdexcept>

namespace dyckx {

std::vector<Series> solve_genfun_matrices(const std::vector<int>& M,
                                          const std::vector<std::vector<long long>>& Aminus,
                                          const std::vector<std::vector<long long>>& A,
                                          const std::vector<std::vector<long long>>& Aplus,
                                          int order) {
  int N = static_cast<int>(M.size());
  SeriesMatrix Am = SeriesMatrix::from_int(Aminus, order);
  SeriesMatrix Amid = SeriesMatrix::from_int(A, order);
  SeriesMatrix Ap = SeriesMatrix::from_int(Aplus, order);
  SeriesMatrix I = SeriesMatrix::identity(N, order);

  std::vector<Series> g(static_cast<size_t>(N), Series(order));
  // Each pass is exact through two more degrees than the last, so order/2 + 1
  // passes reach the fixed point at this truncation.
  for (int pass = 0; pass <= order / 2 + 1; ++pass) {
    SeriesMatrix G(N, order);
    for (int n = 0; n < N; ++n) G.at(n, n) = g[static_cast<size_t>(n)];
    SeriesMatrix inner = Am * (I - G * Amid).inverse() * (G * Ap);
    for (int n = 0; n < N; ++n) {
      Series rhs = inner.at(n, n);
      rhs.set_coeff(0, rhs.coeff(0) + M[static_cast<size_t>(n)]);
      g[static_cast<size_t>(n)] = rhs.shifted(2);
    }
  }
  return g;
}

GenFunSolution solve_genfun(const SubshiftSpec& spec, int order) {
  spec.validate();
  if (order < 2 || order % 2 != 0)
    throw std::invalid_argument("solve_genfun: order must be even and >= 2");
  auto to_ll = [](const IntMatrix& a) {
    std::vector<std::vector<long long>> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i].assign(a[i].begin(), a[i].end());
    return r;
  };
  GenFunSolution sol{solve_genfun_matrices(spec.M, to_ll(spec.Aminus), to_ll(spec.A),
                                           to_ll(spec.Aplus), order),
                     SeriesMatrix(spec.N, order)};
  for (int n = 0; n < spec.N; ++n) sol.G.at(n, n) = sol.g[static_cast<size_t>(n)];
  return sol;
}

namespace {

struct CodeWordSearch {
  const SubshiftSpec& spec;
  std::vector<SignedSymbol> alphabet;
  int length;
  long long count = 0;
  Word word;
  std::vector<int> stack;  // classes of currently open brackets

  explicit CodeWordSearch(const SubshiftSpec& s, int len) : spec(s), length(len) {
    alphabet = s.alphabet();
  }

  void run(int n0) {
    word.push_back(opener(n0, 1));
    stack.push_back(n0);
    extend();
  }

  void extend() {
    int pos = static_cast<int>(word.size());
    int height = static_cast<int>(stack.size());
    if (pos == length) {
      if (height == 0) ++count;
      return;
    }
    // Height must return to 0 in the remaining steps, and interior even
    // checkpoints must stay strictly positive.
    if (height > length - pos) return;
    if (pos % 2 == 0 && height == 0) return;
    for (const SignedSymbol& s : alphabet) {
      if (!spec.pair_allowed(word.back(), s)) continue;
      if (s.sign == Sign::plus) {
        if (stack.empty() || stack.back() != s.n) continue;  // zero product
        stack.pop_back();
        word.push_back(s);
        extend();
        word.pop_back();
        stack.push_back(s.n);
      } else {
        stack.push_back(s.n);
        word.push_back(s);
        extend();
        word.pop_back();
        stack.pop_back();
      }
    }
  }
};

}  // namespace

long long count_code_words(const SubshiftSpec& spec, int n, int length) {
  spec.validate();
  if (n < 0 || n >= spec.N) throw std::invalid_argument("count_code_words: class out of range");
  if (length < 2 || length % 2 != 0)
    throw std::invalid_argument("count_code_words: length must be even and >= 2");
  CodeWordSearch search(spec, length);
  search.run(n);
  return search.count;
}

Series uniform_genfun(int M, int Kminus, int K, int Kplus, int N, int order) {
  if (M < 1 || N < 1) throw std::invalid_argument("uniform_genfun: M and N must be >= 1");
  if (Kminus < 0 || K < 0 || Kplus < 0 || Kminus > M || K > M || Kplus > M)
    throw std::invalid_argument("uniform_genfun: parameters must lie in [0, M]");
  Rational c(static_cast<long long>(M) * K - static_cast<long long>(Kminus) * Kplus);
  Series mid = Series::one(order) + Series::monomial(2, c * N, order);
  if (K == 0) {
    // Degenerate linear case: g (1 - K^-K^+ N z^2) = M z^2.
    Series den =
        Series::one(order) - Series::monomial(2, Rational(static_cast<long long>(Kminus) * Kplus * N), order);
    return Series::monomial(2, Rational(M), order) / den;
  }
  Series rad = mid * mid - Series::monomial(2, Rational(4LL * M * K * N), order);
  return (mid - rad.sqrt()).scaled(Rational(1, 2LL * K * N));
}

Series uniform_genfun_residual(const Series& g, int M, int Kminus, int K, int Kplus, int N) {
  int order = g.order();
  Rational c(static_cast<long long>(M) * K - static_cast<long long>(Kminus) * Kplus);
  Series mid = Series::one(order) + Series::monomial(2, c * N, order);
  return g.scaled(Rational(static_cast<long long>(K) * N)) * g - mid * g +
         Series::monomial(2, Rational(M), order);
}

}  // namespace dyckx
