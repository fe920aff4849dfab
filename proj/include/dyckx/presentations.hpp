#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dyckx/identities.hpp"
#include "dyckx/kernel.hpp"

namespace dyckx {

// Conditions for a two-class exclusion triplet to present its subshift on the
// two-block graph: every row of Aminus nonzero, A irreducible (both
// off-diagonal entries positive), every column of Aplus nonzero.
bool presentation_conditions(const Triplet& t);

// The N = 2 subshift spec with constant copy count M determined by a triplet.
// Throws std::invalid_argument when an entry lies outside [0, M].
SubshiftSpec triplet_spec(const Triplet& t, int M = 1);

// Reversal with sign swap: the returned triplet's subshift is the set of
// reversed, sign-swapped points of the input's.
Triplet time_reverse(const Triplet& t);

// Conjugation of all three matrices by the 0<->1 permutation.
Triplet swap_indices(const Triplet& t);

// The reversed, sign-swapped word (the symbol-level form of time reversal).
Word reverse_word(const Word& w);

// The word with both bracket-class indices exchanged.
Word swap_word(const Word& w);

struct PresentationEdge {
    int from = 0;
    int to = 0;
    Word word;                                 // the length-3 word
    SignedSymbol label{};                      // shipped label: middle symbol
    std::optional<SignedSymbol> variantLabel;  // three-case variant; nullopt = identity
};

struct PresentationGraph {
    SubshiftSpec spec;
    std::vector<Word> vertices;  // length-2 words, lexicographic order
    std::vector<PresentationEdge> edges;
    std::vector<int> inDegree;
    std::vector<int> outDegree;
    bool allVerticesCovered = false;  // every vertex has in- and out-degree >= 1
};

// Two-block presentation of a triplet's subshift: vertices are the admissible
// length-2 words outside the forbidden set, edges the length-3 words whose
// prefix and suffix are both vertices.  Each edge is labeled by its middle
// symbol; for every path, the product of labels is nonzero exactly when the
// word traced by the labels is locally admissible.  The three-case label
// variant (leading opener / trailing closer / identity) is carried alongside
// for comparison.  Requires presentation_conditions(t).
PresentationGraph build_presentation(const Triplet& t, int M = 1);

// Index of a length-2 word in graph.vertices, or -1.
int vertex_index(const PresentationGraph& graph, const Word& pair);

// Middle-symbol word traced by a sequence of edge indices (must be a path).
Word path_label_word(const PresentationGraph& graph, const std::vector<int>& path);

// Product of the three-case labels along a path (identities skipped).
ReducedElement path_variant_product(const PresentationGraph& graph,
                                    const std::vector<int>& path);

// Graphviz form of the presentation graph.
std::string graph_to_dot(const PresentationGraph& graph);

// One symmetry orbit of classified-set members under index swap and time
// reversal.
struct TripletOrbit {
    Triplet representative;       // lexicographically minimal member
    std::vector<Triplet> members; // sorted, unique
    FamilyTags familyAny;         // forms matched by at least one member
    bool outsideAllFamilies = false;
    bool listed = false;     // contains a listed representative triple
};

// One listed (Aminus, Aplus) pair combined with one candidate middle matrix.
struct ListedPairingResult {
    Triplet triplet;
    bool headingConsistent = false;  // candidate A from the pair's own list entry
    bool presentation = false;
    bool diag4 = false;
    bool diag6 = false;
    bool member = false;
};

struct ClassificationReport {
    int total = 0;                 // triplets swept
    int memberCount = 0;           // members of the classified set
    int orbitCount = 0;
    std::vector<TripletOrbit> orbits;
    std::vector<ListedPairingResult> listedPairings;  // 5 pairs x 3 candidates
    bool symmetryConsistent = false;  // membership constant on every orbit
    int slowCheckCount = 0;           // triplets re-decided by series comparison
    bool slowCheckOk = false;         // series route agrees with the fast route
};

// Sweeps all 4096 0-1 triplets (M = 1).  Membership = presentation conditions
// plus both diagonal conditions; when slowCheck is set every triplet is
// re-decided through direct comparison of the two class series (independent
// route) and the verdicts are compared.  Orbits are keyed by their minimal
// member, so the report is deterministic.
ClassificationReport classify_triplets(bool slowCheck = true, int slowOrder = 8);

}  // namespace dyckx
