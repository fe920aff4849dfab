#include "dyckx/presentations.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dyckx/genfun.hpp"

namespace dyckx {

bool presentation_conditions(const Triplet& t) {
    bool rows = (t.Aminus.at(0, 0) != 0 || t.Aminus.at(0, 1) != 0) &&
                (t.Aminus.at(1, 0) != 0 || t.Aminus.at(1, 1) != 0);
    bool irreducible = t.A.at(0, 1) > 0 && t.A.at(1, 0) > 0;
    bool cols = (t.Aplus.at(0, 0) != 0 || t.Aplus.at(1, 0) != 0) &&
                (t.Aplus.at(0, 1) != 0 || t.Aplus.at(1, 1) != 0);
    return rows && irreducible && cols;
}

SubshiftSpec triplet_spec(const Triplet& t, int M) {
    auto rows = [](const Mat2& m) {
        return IntMatrix{{static_cast<int>(m.at(0, 0)), static_cast<int>(m.at(0, 1))},
                         {static_cast<int>(m.at(1, 0)), static_cast<int>(m.at(1, 1))}};
    };
    SubshiftSpec spec = SubshiftSpec::from_matrices(
        {M, M}, rows(t.Aminus), rows(t.A), rows(t.Aplus));
    spec.validate();
    return spec;
}

Triplet time_reverse(const Triplet& t) {
    return Triplet{t.Aplus.transpose(), t.A.transpose(), t.Aminus.transpose()};
}

Triplet swap_indices(const Triplet& t) {
    auto conj = [](const Mat2& m) {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.at(i, j) = m.at(1 - i, 1 - j);
        return r;
    };
    return Triplet{conj(t.Aminus), conj(t.A), conj(t.Aplus)};
}

Word reverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        SignedSymbol s = *it;
        s.sign = s.sign == Sign::minus ? Sign::plus : Sign::minus;
        out.push_back(s);
    }
    return out;
}

Word swap_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (SignedSymbol s : w) {
        if (s.n != 0 && s.n != 1)
            throw std::invalid_argument("index swap needs a two-class word");
        s.n = 1 - s.n;
        out.push_back(s);
    }
    return out;
}

namespace {

bool admissible_pair(const SubshiftSpec& spec, const SignedSymbol& a,
                     const SignedSymbol& b) {
    if (a.sign == Sign::minus && b.sign == Sign::plus && a.n != b.n)
        return false;  // zero product in the monoid
    return spec.pair_allowed(a, b);
}

std::optional<SignedSymbol> variant_label(const Word& w) {
    if (w[0].sign == Sign::minus && w[1].sign == Sign::minus) return w[0];
    if (w[1].sign == Sign::plus && w[2].sign == Sign::plus) return w[2];
    return std::nullopt;
}

}  // namespace

PresentationGraph build_presentation(const Triplet& t, int M) {
    if (!presentation_conditions(t))
        throw std::invalid_argument(
            "presentation conditions not met: need nonzero rows in Aminus, "
            "irreducible A, nonzero columns in Aplus");
    PresentationGraph graph;
    graph.spec = triplet_spec(t, M);
    const std::vector<SignedSymbol> alphabet = graph.spec.alphabet();
    for (const SignedSymbol& a : alphabet)
        for (const SignedSymbol& b : alphabet)
            if (admissible_pair(graph.spec, a, b))
                graph.vertices.push_back(Word{a, b});

    graph.inDegree.assign(graph.vertices.size(), 0);
    graph.outDegree.assign(graph.vertices.size(), 0);
    for (size_t i = 0; i < graph.vertices.size(); ++i) {
        const Word& v = graph.vertices[i];
        for (size_t j = 0; j < graph.vertices.size(); ++j) {
            const Word& w = graph.vertices[j];
            if (v[1] != w[0]) continue;
            PresentationEdge edge;
            edge.from = static_cast<int>(i);
            edge.to = static_cast<int>(j);
            edge.word = Word{v[0], v[1], w[1]};
            edge.label = v[1];
            edge.variantLabel = variant_label(edge.word);
            graph.edges.push_back(edge);
            ++graph.outDegree[i];
            ++graph.inDegree[j];
        }
    }
    graph.allVerticesCovered = true;
    for (size_t i = 0; i < graph.vertices.size(); ++i)
        if (graph.inDegree[i] == 0 || graph.outDegree[i] == 0)
            graph.allVerticesCovered = false;
    return graph;
}

int vertex_index(const PresentationGraph& graph, const Word& pair) {
    auto it = std::lower_bound(graph.vertices.begin(), graph.vertices.end(), pair);
    if (it == graph.vertices.end() || *it != pair) return -1;
    return static_cast<int>(it - graph.vertices.begin());
}

Word path_label_word(const PresentationGraph& graph, const std::vector<int>& path) {
    Word out;
    out.reserve(path.size());
    for (size_t i = 0; i < path.size(); ++i) {
        int e = path[i];
        if (e < 0 || e >= static_cast<int>(graph.edges.size()))
            throw std::invalid_argument("edge index out of range");
        if (i > 0 && graph.edges[static_cast<size_t>(path[i - 1])].to !=
                         graph.edges[static_cast<size_t>(e)].from)
            throw std::invalid_argument("edge sequence is not a path");
        out.push_back(graph.edges[static_cast<size_t>(e)].label);
    }
    return out;
}

ReducedElement path_variant_product(const PresentationGraph& graph,
                                    const std::vector<int>& path) {
    Word symbols;
    for (size_t i = 0; i < path.size(); ++i) {
        int e = path[i];
        if (e < 0 || e >= static_cast<int>(graph.edges.size()))
            throw std::invalid_argument("edge index out of range");
        if (i > 0 && graph.edges[static_cast<size_t>(path[i - 1])].to !=
                         graph.edges[static_cast<size_t>(e)].from)
            throw std::invalid_argument("edge sequence is not a path");
        const auto& label = graph.edges[static_cast<size_t>(e)].variantLabel;
        if (label) symbols.push_back(*label);
    }
    return reduce(symbols);
}

std::string graph_to_dot(const PresentationGraph& graph) {
    std::ostringstream out;
    out << "digraph presentation {\n  rankdir=LR;\n";
    for (size_t i = 0; i < graph.vertices.size(); ++i)
        out << "  v" << i << " [label=\"" << word_to_string(graph.vertices[i])
            << "\"];\n";
    for (const PresentationEdge& e : graph.edges)
        out << "  v" << e.from << " -> v" << e.to << " [label=\""
            << symbol_to_string(e.label) << "\"];\n";
    out << "}\n";
    return out.str();
}

namespace {

Mat2 mat_from_bits(int bits) {
    Mat2 m;
    m.at(0, 0) = bits & 1;
    m.at(0, 1) = (bits >> 1) & 1;
    m.at(1, 0) = (bits >> 2) & 1;
    m.at(1, 1) = (bits >> 3) & 1;
    return m;
}

bool fast_member(const Triplet& t) {
    if (!presentation_conditions(t)) return false;
    auto [c4, c6] = diag_conditions(t);
    return c4 && c6;
}

bool slow_member(const Triplet& t, int order) {
    if (!presentation_conditions(t)) return false;
    auto rows = [](const Mat2& m) {
        return std::vector<std::vector<long long>>{
            {m.at(0, 0), m.at(0, 1)}, {m.at(1, 0), m.at(1, 1)}};
    };
    std::vector<int> mvec{1, 1};
    std::vector<Series> sol = solve_genfun_matrices(mvec, rows(t.Aminus),
                                                    rows(t.A), rows(t.Aplus), order);
    return sol[0] == sol[1];
}

// The listed representative pairs and the candidate middle matrices they are
// quoted with; the first pair is listed with the first candidate only, the
// remaining four with the other two candidates.
struct ListedPair {
    Mat2 Aminus, Aplus;
    bool firstHeading;
};

std::vector<ListedPair> listed_pairs() {
    Mat2 a1{{{{1, 1}, {1, 0}}}};
    Mat2 sw{{{{0, 1}, {1, 0}}}};
    Mat2 ones{{{{1, 1}, {1, 1}}}};
    Mat2 id = Mat2::identity();
    Mat2 upper{{{{1, 1}, {0, 1}}}};
    return {
        {a1, sw, true},
        {ones, id, false},
        {upper, upper, false},
        {ones, sw, false},
        {a1, Mat2{{{{0, 1}, {1, 1}}}}, false},
    };
}

std::vector<Mat2> candidate_middles() {
    return {Mat2{{{{1, 1}, {1, 0}}}}, Mat2{{{{0, 1}, {1, 0}}}},
            Mat2{{{{1, 1}, {1, 1}}}}};
}

}  // namespace

ClassificationReport classify_triplets(bool slowCheck, int slowOrder) {
    ClassificationReport report;
    report.slowCheckOk = true;
    std::map<Triplet, TripletOrbit> orbits;
    std::set<Triplet> listedSet;

    const auto pairs = listed_pairs();
    const auto middles = candidate_middles();
    for (const ListedPair& p : pairs) {
        for (size_t c = 0; c < middles.size(); ++c) {
            ListedPairingResult res;
            res.triplet = Triplet{p.Aminus, middles[c], p.Aplus};
            res.headingConsistent = p.firstHeading ? c == 0 : c != 0;
            res.presentation = presentation_conditions(res.triplet);
            auto [c4, c6] = diag_conditions(res.triplet);
            res.diag4 = c4;
            res.diag6 = c6;
            res.member = fast_member(res.triplet);
            report.listedPairings.push_back(res);
            if (res.headingConsistent) listedSet.insert(res.triplet);
        }
    }

    report.symmetryConsistent = true;
    for (int am = 0; am < 16; ++am) {
        for (int a = 0; a < 16; ++a) {
            for (int ap = 0; ap < 16; ++ap) {
                Triplet t{mat_from_bits(am), mat_from_bits(a), mat_from_bits(ap)};
                ++report.total;
                bool member = fast_member(t);
                if (slowCheck) {
                    ++report.slowCheckCount;
                    if (slow_member(t, slowOrder) != member)
                        report.slowCheckOk = false;
                }
                if (!member) continue;
                ++report.memberCount;
                Triplet s = swap_indices(t);
                Triplet r = time_reverse(t);
                Triplet sr = swap_indices(r);
                std::vector<Triplet> members{t, s, r, sr};
                std::sort(members.begin(), members.end());
                members.erase(std::unique(members.begin(), members.end()),
                              members.end());
                for (const Triplet& m : members)
                    if (fast_member(m) != member) report.symmetryConsistent = false;
                Triplet key = members.front();
                auto [it, inserted] = orbits.try_emplace(key);
                if (inserted) {
                    TripletOrbit& orbit = it->second;
                    orbit.representative = key;
                    orbit.members = members;
                    for (const Triplet& m : members) {
                        FamilyTags tags = family_of(m);
                        orbit.familyAny.circulant |= tags.circulant;
                        orbit.familyAny.rowColumnConstant |= tags.rowColumnConstant;
                        orbit.familyAny.swapTranspose |= tags.swapTranspose;
                        if (listedSet.count(m)) orbit.listed = true;
                    }
                    orbit.outsideAllFamilies = !orbit.familyAny.circulant &&
                                               !orbit.familyAny.rowColumnConstant &&
                                               !orbit.familyAny.swapTranspose;
                }
            }
        }
    }

    report.orbits.reserve(orbits.size());
    for (auto& [key, orbit] : orbits) report.orbits.push_back(std::move(orbit));
    report.orbitCount = static_cast<int>(report.orbits.size());
    return report;
}

}  // namespace dyckx
