#include "dyckx/kernel.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dyckx {

std::string symbol_to_string(const SignedSymbol& s) {
  std::ostringstream os;
  os << (s.sign == Sign::minus ? '-' : '+') << s.n << '.' << s.m;
  return os.str();
}

SignedSymbol symbol_from_string(const std::string& text) {
  if (text.size() < 4 || (text[0] != '-' && text[0] != '+'))
    throw std::invalid_argument("malformed symbol: \"" + text + "\"");
  auto dot = text.find('.');
  if (dot == std::string::npos || dot < 2 || dot + 1 >= text.size())
    throw std::invalid_argument("malformed symbol: \"" + text + "\"");
  try {
    int n = std::stoi(text.substr(1, dot - 1));
    int m = std::stoi(text.substr(dot + 1));
    return {text[0] == '-' ? Sign::minus : Sign::plus, n, m};
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed symbol: \"" + text + "\"");
  }
}

std::string word_to_string(const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += symbol_to_string(w[i]);
  }
  return out;
}

int rho(const SignedSymbol& s) { return s.sign == Sign::minus ? +1 : -1; }

std::string multiplier_class_name(MultiplierClass c) {
  switch (c) {
    case MultiplierClass::Zero: return "Zero";
    case MultiplierClass::Neutral: return "Neutral";
    case MultiplierClass::NonPositive: return "NonPositive";
    case MultiplierClass::NonNegative: return "NonNegative";
    case MultiplierClass::Mixed: return "Mixed";
  }
  return "?";
}

MultiplierClass ReducedElement::cls() const {
  if (zero) return MultiplierClass::Zero;
  if (unmatchedPlus.empty() && unmatchedMinus.empty()) return MultiplierClass::Neutral;
  if (unmatchedPlus.empty()) return MultiplierClass::NonPositive;
  if (unmatchedMinus.empty()) return MultiplierClass::NonNegative;
  return MultiplierClass::Mixed;
}

ReducedElement reduce(const Word& w) {
  ReducedElement r;
  for (const SignedSymbol& s : w) {
    if (s.sign == Sign::minus) {
      r.unmatchedMinus.push_back(s);
    } else if (!r.unmatchedMinus.empty()) {
      if (r.unmatchedMinus.back().n != s.n) return ReducedElement::make_zero();
      r.unmatchedMinus.pop_back();
    } else {
      r.unmatchedPlus.push_back(s);
    }
  }
  return r;
}

ReducedElement reduce_concat(const ReducedElement& a, const ReducedElement& b) {
  if (a.zero || b.zero) return ReducedElement::make_zero();
  Word w = a.unmatchedPlus;
  w.insert(w.end(), a.unmatchedMinus.begin(), a.unmatchedMinus.end());
  w.insert(w.end(), b.unmatchedPlus.begin(), b.unmatchedPlus.end());
  w.insert(w.end(), b.unmatchedMinus.begin(), b.unmatchedMinus.end());
  return reduce(w);
}

MultiplierClass multiplier_class(const Word& w) { return reduce(w).cls(); }

namespace {

void check_matrix(const IntMatrix& a, const char* name, int N, const std::vector<int>& M) {
  if (static_cast<int>(a.size()) != N)
    throw std::invalid_argument(std::string(name) + " must be " + std::to_string(N) + "x" +
                                std::to_string(N));
  for (int i = 0; i < N; ++i) {
    if (static_cast<int>(a[i].size()) != N)
      throw std::invalid_argument(std::string(name) + " must be " + std::to_string(N) + "x" +
                                  std::to_string(N));
    for (int j = 0; j < N; ++j) {
      if (a[i][j] < 0 || a[i][j] > M[j]) {
        std::ostringstream os;
        os << name << "(" << i << "," << j << ") = " << a[i][j]
           << " violates 0 <= entry <= M[" << j << "] = " << M[j];
        throw std::invalid_argument(os.str());
      }
    }
  }
}

void check_subsets(const std::vector<std::vector<std::vector<int>>>& t, const IntMatrix& a,
                   const char* name, int N, const std::vector<int>& M) {
  if (static_cast<int>(t.size()) != N)
    throw std::invalid_argument(std::string("subsets.") + name + " must have " +
                                std::to_string(N) + " rows");
  for (int i = 0; i < N; ++i) {
    if (static_cast<int>(t[i].size()) != N)
      throw std::invalid_argument(std::string("subsets.") + name + " row " + std::to_string(i) +
                                  " must have " + std::to_string(N) + " slots");
    for (int j = 0; j < N; ++j) {
      const auto& members = t[i][j];
      std::ostringstream slot;
      slot << "subsets." << name << "(" << i << "," << j << ")";
      if (static_cast<int>(members.size()) != a[i][j])
        throw std::invalid_argument(slot.str() + " has " + std::to_string(members.size()) +
                                    " members but the count matrix entry is " +
                                    std::to_string(a[i][j]));
      for (size_t k = 0; k < members.size(); ++k) {
        if (members[k] < 1 || members[k] > M[j])
          throw std::invalid_argument(slot.str() + " member " + std::to_string(members[k]) +
                                      " outside [1, M[" + std::to_string(j) + "] = " +
                                      std::to_string(M[j]) + "]");
        if (k > 0 && members[k] <= members[k - 1])
          throw std::invalid_argument(slot.str() + " members must be strictly increasing");
      }
    }
  }
}

bool subset_allows(const std::vector<std::vector<std::vector<int>>>& t, int n, int np, int m) {
  const auto& members = t[n][np];
  return std::binary_search(members.begin(), members.end(), m);
}

}  // namespace

void SubshiftSpec::validate() const {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (static_cast<int>(M.size()) != N)
    throw std::invalid_argument("M must list one copy count per class");
  for (int n = 0; n < N; ++n)
    if (M[n] < 1) throw std::invalid_argument("M[" + std::to_string(n) + "] must be >= 1");
  check_matrix(Aminus, "Aminus", N, M);
  check_matrix(A, "A", N, M);
  check_matrix(Aplus, "Aplus", N, M);
  if (subsets) {
    check_subsets(subsets->minus, Aminus, "Aminus", N, M);
    check_subsets(subsets->mid, A, "A", N, M);
    check_subsets(subsets->plus, Aplus, "Aplus", N, M);
  }
}

std::vector<SignedSymbol> SubshiftSpec::alphabet() const {
  std::vector<SignedSymbol> out;
  for (Sign sign : {Sign::minus, Sign::plus})
    for (int n = 0; n < N; ++n)
      for (int m = 1; m <= M[n]; ++m) out.push_back({sign, n, m});
  return out;
}

bool SubshiftSpec::pair_allowed(const SignedSymbol& a, const SignedSymbol& b) const {
  if (a.sign == Sign::minus && b.sign == Sign::plus) return true;
  if (subsets) {
    if (a.sign == Sign::minus) return subset_allows(subsets->minus, a.n, b.n, b.m);
    if (b.sign == Sign::minus) return subset_allows(subsets->mid, a.n, b.n, b.m);
    return subset_allows(subsets->plus, a.n, b.n, b.m);
  }
  if (a.sign == Sign::minus) return b.m <= Aminus[a.n][b.n];
  if (b.sign == Sign::minus) return b.m <= A[a.n][b.n];
  return b.m <= Aplus[a.n][b.n];
}

SubshiftSpec SubshiftSpec::full_dyck(int N) {
  SubshiftSpec s;
  s.N = N;
  s.M.assign(N, 1);
  s.Aminus.assign(N, std::vector<int>(N, 1));
  s.A = s.Aminus;
  s.Aplus = s.Aminus;
  s.validate();
  return s;
}

SubshiftSpec SubshiftSpec::from_matrices(std::vector<int> M, IntMatrix Aminus, IntMatrix A,
                                         IntMatrix Aplus) {
  SubshiftSpec s;
  s.N = static_cast<int>(M.size());
  s.M = std::move(M);
  s.Aminus = std::move(Aminus);
  s.A = std::move(A);
  s.Aplus = std::move(Aplus);
  s.validate();
  return s;
}

bool is_locally_admissible(const SubshiftSpec& spec, const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (!spec.pair_allowed(w[i], w[i + 1])) return false;
  return !reduce(w).zero;
}

std::pair<bool, MultiplierClass> is_periodic_word(const SubshiftSpec& spec, const Word& w) {
  if (w.empty()) throw std::invalid_argument("is_periodic_word: empty word");
  for (size_t i = 0; i < w.size(); ++i)
    if (!spec.pair_allowed(w[i], w[(i + 1) % w.size()]))
      return {false, MultiplierClass::Zero};
  // The height sum fixes which one-sided class a rotation could land in, so the
  // first non-Zero, non-Mixed rotation class is the answer.
  Word rot = w;
  for (size_t r = 0; r < w.size(); ++r) {
    MultiplierClass c = multiplier_class(rot);
    if (c == MultiplierClass::Neutral || c == MultiplierClass::NonPositive ||
        c == MultiplierClass::NonNegative)
      return {true, c};
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
  }
  return {false, MultiplierClass::Zero};
}

namespace {

// Permutation of [1, M'] sending `members` onto the initial interval in order,
// and the complement onto the tail in order. Index 0 is unused.
std::vector<int> interval_permutation(const std::vector<int>& members, int Mp) {
  std::vector<int> perm(static_cast<size_t>(Mp) + 1, 0);
  int next = 1;
  for (int m : members) perm[static_cast<size_t>(m)] = next++;
  for (int m = 1; m <= Mp; ++m)
    if (perm[static_cast<size_t>(m)] == 0) perm[static_cast<size_t>(m)] = next++;
  return perm;
}

std::vector<std::vector<std::vector<int>>> identity_tables(const std::vector<int>& M) {
  int N = static_cast<int>(M.size());
  std::vector<std::vector<std::vector<int>>> t(N, std::vector<std::vector<int>>(N));
  for (int n = 0; n < N; ++n)
    for (int np = 0; np < N; ++np) {
      t[n][np].resize(static_cast<size_t>(M[np]) + 1);
      for (int m = 0; m <= M[np]; ++m) t[n][np][static_cast<size_t>(m)] = m;
    }
  return t;
}

std::vector<std::vector<std::vector<int>>> invert_tables(
    const std::vector<std::vector<std::vector<int>>>& t) {
  auto out = t;
  for (size_t n = 0; n < t.size(); ++n)
    for (size_t np = 0; np < t[n].size(); ++np)
      for (size_t m = 1; m < t[n][np].size(); ++m)
        out[n][np][static_cast<size_t>(t[n][np][m])] = static_cast<int>(m);
  return out;
}

}  // namespace

RelabelMap RelabelMap::inverted() const {
  RelabelMap inv;
  inv.source = target;
  inv.target = source;
  inv.minusMinus = invert_tables(minusMinus);
  inv.plusMinus = invert_tables(plusMinus);
  inv.plusPlus = invert_tables(plusPlus);
  return inv;
}

std::pair<SubshiftSpec, RelabelMap> canonicalize(const SubshiftSpec& spec) {
  spec.validate();
  SubshiftSpec canon = spec;
  canon.subsets.reset();

  RelabelMap map;
  map.source = spec;
  map.target = canon;
  map.minusMinus = identity_tables(spec.M);
  map.plusMinus = identity_tables(spec.M);
  map.plusPlus = identity_tables(spec.M);
  if (!spec.subsets) return {canon, map};

  for (int n = 0; n < spec.N; ++n)
    for (int np = 0; np < spec.N; ++np) {
      map.minusMinus[n][np] = interval_permutation(spec.subsets->minus[n][np], spec.M[np]);
      map.plusMinus[n][np] = interval_permutation(spec.subsets->mid[n][np], spec.M[np]);
      map.plusPlus[n][np] = interval_permutation(spec.subsets->plus[n][np], spec.M[np]);
    }
  return {canon, map};
}

namespace {

SignedSymbol relabel_at(const SignedSymbol& prev, const SignedSymbol& cur,
                        const RelabelMap& map) {
  if (prev.sign == Sign::minus && cur.sign == Sign::plus) return cur;
  const auto& table = prev.sign == Sign::minus
                          ? map.minusMinus
                          : (cur.sign == Sign::minus ? map.plusMinus : map.plusPlus);
  SignedSymbol out = cur;
  out.m = table[static_cast<size_t>(prev.n)][static_cast<size_t>(cur.n)]
               [static_cast<size_t>(cur.m)];
  return out;
}

}  // namespace

Word relabel_word(const Word& w, const RelabelMap& map) {
  if (w.empty()) throw std::invalid_argument("relabel_word: empty word");
  if (!is_locally_admissible(map.source, w))
    throw std::invalid_argument("relabel_word: word not locally admissible for the source spec");
  Word out = w;
  for (size_t i = 1; i < w.size(); ++i) out[i] = relabel_at(w[i - 1], w[i], map);
  return out;
}

Word relabel_word_cyclic(const Word& w, const RelabelMap& map) {
  if (w.empty()) throw std::invalid_argument("relabel_word_cyclic: empty word");
  Word out = w;
  for (size_t i = 0; i < w.size(); ++i)
    out[i] = relabel_at(w[(i + w.size() - 1) % w.size()], w[i], map);
  return out;
}

DiagnosticsReport diagnostics(const SubshiftSpec& spec) {
  spec.validate();
  std::vector<SignedSymbol> alph = spec.alphabet();
  auto pair_admissible = [&](const SignedSymbol& a, const SignedSymbol& b) {
    if (!spec.pair_allowed(a, b)) return false;
    // The only two-symbol zero product is a mismatched open/close pair.
    return !(a.sign == Sign::minus && b.sign == Sign::plus && a.n != b.n);
  };

  DiagnosticsReport report;
  std::vector<bool> class_alive(static_cast<size_t>(spec.N), false);
  for (const SignedSymbol& s : alph) {
    SymbolDiagnostic d{s, true, true};
    for (const SignedSymbol& t : alph) {
      if (pair_admissible(s, t)) d.successorDead = false;
      if (pair_admissible(t, s)) d.predecessorDead = false;
      if (!d.successorDead && !d.predecessorDead) break;
    }
    if (d.successorDead || d.predecessorDead)
      report.deadSymbols.push_back(d);
    else
      class_alive[static_cast<size_t>(s.n)] = true;
  }
  for (int n = 0; n < spec.N; ++n)
    if (!class_alive[static_cast<size_t>(n)]) report.emptyAlphabetClasses.push_back(n);
  return report;
}

}  // namespace dyckx
