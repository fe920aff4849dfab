#include "dyckx/zeta.hpp"

namespace dyckx {

Series markov_zeta(const SeriesMatrix& H) {
  for (int i = 0; i < H.dim(); ++i)
    for (int j = 0; j < H.dim(); ++j)
      if (H.at(i, j).coeff(0) != 0)
        throw std::domain_error("markov_zeta: weight matrix must have zero constant term");
  return (SeriesMatrix::identity(H.dim(), H.order()) - H).det().inverse();
}

ZetaParts zeta_parts(const SubshiftSpec& spec, int order, ZetaVariant variant) {
  GenFunSolution sol = solve_genfun(spec, order);
  auto to_ll = [](const IntMatrix& a) {
    std::vector<std::vector<long long>> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i].assign(a[i].begin(), a[i].end());
    return r;
  };
  SeriesMatrix Am = SeriesMatrix::from_int(to_ll(spec.Aminus), order);
  SeriesMatrix A = SeriesMatrix::from_int(to_ll(spec.A), order);
  SeriesMatrix Ap = SeriesMatrix::from_int(to_ll(spec.Aplus), order);
  SeriesMatrix I = SeriesMatrix::identity(spec.N, order);
  Series z = Series::monomial(1, Rational(1), order);

  SeriesMatrix GA = sol.G * A;
  SeriesMatrix AG = A * sol.G;
  Series neutral_det = (I - GA).det();  // = det(1 - AG)

  ZetaParts parts{
      neutral_det.inverse(),
      (I - Am.scaled(z) - (variant.minusFactorGA ? GA : AG)).det().inverse(),
      (I - Ap.scaled(z) - (variant.plusFactorAG ? AG : GA)).det().inverse(),
      Series(order),
  };
  parts.total = parts.nonPositive * parts.nonNegative * neutral_det;
  return parts;
}

namespace {

// Flat-index alphabet tables for the census search.
struct CensusTables {
  std::vector<SignedSymbol> symbols;
  std::vector<std::vector<char>> adjacent;  // pair allowed and product nonzero
};

CensusTables build_tables(const SubshiftSpec& spec) {
  CensusTables t;
  t.symbols = spec.alphabet();
  size_t S = t.symbols.size();
  t.adjacent.assign(S, std::vector<char>(S, 0));
  for (size_t a = 0; a < S; ++a)
    for (size_t b = 0; b < S; ++b) {
      const SignedSymbol &sa = t.symbols[a], &sb = t.symbols[b];
      bool mismatch =
          sa.sign == Sign::minus && sb.sign == Sign::plus && sa.n != sb.n;
      t.adjacent[a][b] = !mismatch && spec.pair_allowed(sa, sb);
    }
  return t;
}

struct CensusSearch {
  const CensusTables& tables;
  int n_max;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  PeriodicCensus census;

  std::vector<int> word;        // symbol indices
  std::vector<int> openStack;   // classes of open brackets
  std::vector<int> closerRun;   // classes of unmatched closers, in order

  CensusSearch(const CensusTables& t, int n, std::uint64_t b) : tables(t), n_max(n), budget(b) {
    census.n_max = n;
    census.total.assign(static_cast<size_t>(n) + 1, 0);
    census.nonPositive = census.total;
    census.nonNegative = census.total;
    census.neutral = census.total;
  }

  // The word so far is a candidate period; see whether wrapping it closes up:
  // the cyclic adjacency must be admissible and the unmatched closers must
  // match the open brackets class-by-class (top of stack against first
  // unmatched closer), which is exactly reduce(word^2) != 0.
  void record() {
    if (!tables.adjacent[static_cast<size_t>(word.back())][static_cast<size_t>(word.front())])
      return;
    size_t pairs = std::min(openStack.size(), closerRun.size());
    for (size_t i = 0; i < pairs; ++i)
      if (openStack[openStack.size() - 1 - i] != closerRun[i]) return;
    size_t n = word.size();
    census.total[n] += 1;
    if (openStack.size() > closerRun.size()) {
      census.nonPositive[n] += 1;
    } else if (openStack.size() < closerRun.size()) {
      census.nonNegative[n] += 1;
    } else {
      census.neutral[n] += 1;
      census.nonPositive[n] += 1;
      census.nonNegative[n] += 1;
    }
  }

  void extend() {
    record();
    if (static_cast<int>(word.size()) == n_max) return;
    size_t S = tables.symbols.size();
    int prev = word.back();
    for (size_t s = 0; s < S; ++s) {
      if (!tables.adjacent[static_cast<size_t>(prev)][s]) continue;
      if (++nodes > budget) throw BudgetExceeded("periodic_census: node budget exceeded");
      const SignedSymbol& sym = tables.symbols[s];
      bool pushed = false, popped = false, ranClose = false;
      if (sym.sign == Sign::minus) {
        openStack.push_back(sym.n);
        pushed = true;
      } else if (!openStack.empty()) {
        if (openStack.back() != sym.n) continue;  // zero prefix product: prune
        openStack.pop_back();
        popped = true;
      } else {
        closerRun.push_back(sym.n);
        ranClose = true;
      }
      word.push_back(static_cast<int>(s));
      extend();
      word.pop_back();
      if (pushed) openStack.pop_back();
      if (popped) openStack.push_back(sym.n);
      if (ranClose) closerRun.pop_back();
    }
  }

  void run() {
    size_t S = tables.symbols.size();
    for (size_t s = 0; s < S; ++s) {
      if (++nodes > budget) throw BudgetExceeded("periodic_census: node budget exceeded");
      const SignedSymbol& sym = tables.symbols[s];
      if (sym.sign == Sign::minus)
        openStack.push_back(sym.n);
      else
        closerRun.push_back(sym.n);
      word.push_back(static_cast<int>(s));
      extend();
      word.pop_back();
      openStack.clear();
      closerRun.clear();
    }
  }
};

}  // namespace

PeriodicCensus periodic_census(const SubshiftSpec& spec, int n_max, std::uint64_t node_budget) {
  spec.validate();
  if (n_max < 1) throw std::invalid_argument("periodic_census: n_max must be >= 1");
  CensusTables tables = build_tables(spec);
  CensusSearch search(tables, n_max, node_budget);
  search.run();
  return search.census;
}

ZetaParts oracle_parts(const PeriodicCensus& census) {
  auto to_int = [](const std::vector<long long>& v) {
    std::vector<Int> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
  };
  return ZetaParts{
      Series::exp_from_counts(to_int(census.neutral), census.n_max),
      Series::exp_from_counts(to_int(census.nonPositive), census.n_max),
      Series::exp_from_counts(to_int(census.nonNegative), census.n_max),
      Series::exp_from_counts(to_int(census.total), census.n_max),
  };
}

Series zeta_oracle(const SubshiftSpec& spec, int n_max) {
  return oracle_parts(periodic_census(spec, n_max)).total;
}

}  // namespace dyckx
