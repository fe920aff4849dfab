#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dyckx {

// One bracket symbol: minus symbols open, plus symbols close. n is the bracket
// class in [0, N); m is the copy index in [1, M_n].
enum class Sign { minus, plus };

struct SignedSymbol {
  Sign sign;
  int n;
  int m = 1;

  bool operator==(const SignedSymbol&) const = default;
  auto operator<=>(const SignedSymbol&) const = default;
};

using Word = std::vector<SignedSymbol>;

inline SignedSymbol opener(int n, int m = 1) { return {Sign::minus, n, m}; }
inline SignedSymbol closer(int n, int m = 1) { return {Sign::plus, n, m}; }

// "-0.1" / "+1.2" (sign, class, copy).
std::string symbol_to_string(const SignedSymbol& s);
SignedSymbol symbol_from_string(const std::string& text);
std::string word_to_string(const Word& w);

// Height increment: +1 for openers, -1 for closers.
int rho(const SignedSymbol& s);

enum class MultiplierClass { Zero, Neutral, NonPositive, NonNegative, Mixed };

std::string multiplier_class_name(MultiplierClass c);

// Product of a word in the bracket monoid, in normal form: either the zero
// element, or unmatched closers (in order of appearance) followed by unmatched
// openers (in order of appearance).
struct ReducedElement {
  bool zero = false;
  Word unmatchedPlus;
  Word unmatchedMinus;

  static ReducedElement make_zero() { return {true, {}, {}}; }
  bool is_identity() const { return !zero && unmatchedPlus.empty() && unmatchedMinus.empty(); }
  MultiplierClass cls() const;

  bool operator==(const ReducedElement&) const = default;
};

// Evaluate the monoid product: matching open/close pairs with equal class
// cancel; a matched pair with differing classes collapses the whole product to
// zero. Total and spec-independent.
ReducedElement reduce(const Word& w);

// Product of two already-reduced elements (zero absorbing).
ReducedElement reduce_concat(const ReducedElement& a, const ReducedElement& b);

MultiplierClass multiplier_class(const Word& w);

// Allowed copy indices per (n, n') slot, ascending, values in [1, M_{n'}].
// minus constrains opener-after-opener, mid opener-after-closer, plus
// closer-after-closer; closer-after-opener pairs carry no such constraint.
struct SubsetFamily {
  std::vector<std::vector<std::vector<int>>> minus, mid, plus;

  bool operator==(const SubsetFamily&) const = default;
};

using IntMatrix = std::vector<std::vector<int>>;

// A subshift given by copy-count matrices (and optionally the explicit allowed
// subsets; absent subsets mean the initial intervals [1, entry]).
struct SubshiftSpec {
  int N = 0;
  std::vector<int> M;
  IntMatrix Aminus, A, Aplus;
  std::optional<SubsetFamily> subsets;

  // Throws std::invalid_argument naming the violated restriction.
  void validate() const;

  // All symbols, deterministic order: openers by (n, m), then closers.
  std::vector<SignedSymbol> alphabet() const;

  // True when the two-symbol factor `a b` avoids the forbidden set (this is
  // the length-two exclusion check only, not the nonzero-product check).
  bool pair_allowed(const SignedSymbol& a, const SignedSymbol& b) const;

  static SubshiftSpec full_dyck(int N);
  static SubshiftSpec from_matrices(std::vector<int> M, IntMatrix Aminus, IntMatrix A,
                                    IntMatrix Aplus);

  bool operator==(const SubshiftSpec&) const = default;
};

// Nonzero product and no forbidden length-two factor.
bool is_locally_admissible(const SubshiftSpec& spec, const Word& w);

// Decides whether w repeated forever is a point of the subshift: all cyclic
// length-two factors must avoid the forbidden set and some rotation of w must
// reduce to a one-sided normal form (identity, pure openers, or pure closers).
// Returns that rotation's class (identity rotations win); the class is
// MultiplierClass::Zero when the word is not periodic.
std::pair<bool, MultiplierClass> is_periodic_word(const SubshiftSpec& spec, const Word& w);

// Copy-index permutations realizing a conjugacy between two specs with equal
// count matrices. Entry [n][n'][m] gives the image of copy m (index 0 unused);
// the pattern (sign of predecessor, sign of symbol) picks the table.
struct RelabelMap {
  SubshiftSpec source, target;
  std::vector<std::vector<std::vector<int>>> minusMinus, plusMinus, plusPlus;

  RelabelMap inverted() const;
};

// Rewrites an explicit-subset spec as the interval-subset spec with the same
// count matrices, together with the relabeling that realizes the conjugacy.
// A spec without explicit subsets canonicalizes to itself under identities.
std::pair<SubshiftSpec, RelabelMap> canonicalize(const SubshiftSpec& spec);

// Two-block substitution: each symbol after the first is relabeled through the
// permutation selected by its predecessor's sign and its own sign; the first
// symbol and closer-after-opener positions stay fixed. Throws if w is not
// locally admissible for map.source.
Word relabel_word(const Word& w, const RelabelMap& map);

// Same substitution on a cyclic word (the first symbol's predecessor is the
// last symbol); this is the map induced on periodic points.
Word relabel_word_cyclic(const Word& w, const RelabelMap& map);

struct SymbolDiagnostic {
  SignedSymbol symbol;
  bool successorDead = false;
  bool predecessorDead = false;

  bool operator==(const SymbolDiagnostic&) const = default;
};

// Advisory degeneracy report: symbols with no admissible successor or
// predecessor, and classes all of whose symbols are dead.
struct DiagnosticsReport {
  std::vector<SymbolDiagnostic> deadSymbols;
  std::vector<int> emptyAlphabetClasses;

  bool empty() const { return deadSymbols.empty() && emptyAlphabetClasses.empty(); }
};

DiagnosticsReport diagnostics(const SubshiftSpec& spec);

}  // namespace dyckx
