#include "dyckx/spec_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dyckx {

using ordered_json = nlohmann::ordered_json;

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(message), line(line), column(column) {}

namespace {

[[noreturn]] void throw_parse_error(const std::string& text,
                                    const nlohmann::json::parse_error& e) {
    size_t pos = e.byte > 0 ? static_cast<size_t>(e.byte) - 1 : 0;
    if (pos > text.size()) pos = text.size();
    int line = 1;
    int column = 1;
    for (size_t i = 0; i < pos; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    std::ostringstream msg;
    msg << "malformed JSON at line " << line << ", column " << column << ": "
        << e.what();
    throw ParseError(msg.str(), line, column);
}

int require_int(const ordered_json& j, const std::string& name) {
    if (!j.contains(name) || !j[name].is_number_integer())
        throw std::invalid_argument("field \"" + name +
                                    "\" must be present and an integer");
    return j[name].get<int>();
}

std::vector<int> require_int_list(const ordered_json& j, const std::string& name) {
    if (!j.contains(name) || !j[name].is_array())
        throw std::invalid_argument("field \"" + name +
                                    "\" must be present and an array");
    std::vector<int> out;
    for (const auto& v : j[name]) {
        if (!v.is_number_integer())
            throw std::invalid_argument("field \"" + name +
                                        "\" must contain integers");
        out.push_back(v.get<int>());
    }
    return out;
}

IntMatrix require_matrix(const ordered_json& j, const std::string& name) {
    if (!j.contains(name) || !j[name].is_array())
        throw std::invalid_argument("field \"" + name +
                                    "\" must be present and an array of rows");
    IntMatrix out;
    for (const auto& row : j[name]) {
        if (!row.is_array())
            throw std::invalid_argument("field \"" + name +
                                        "\" rows must be arrays");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw std::invalid_argument("field \"" + name +
                                            "\" entries must be integers");
            r.push_back(v.get<int>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<std::vector<std::vector<int>>> require_subset_table(
    const ordered_json& j, const std::string& name) {
    if (!j.contains(name) || !j[name].is_array())
        throw std::invalid_argument("subsets table \"" + name +
                                    "\" must be present and an array");
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& row : j[name]) {
        if (!row.is_array())
            throw std::invalid_argument("subsets table \"" + name +
                                        "\" rows must be arrays");
        std::vector<std::vector<int>> r;
        for (const auto& cell : row) {
            if (!cell.is_array())
                throw std::invalid_argument("subsets table \"" + name +
                                            "\" cells must be arrays");
            std::vector<int> members;
            for (const auto& v : cell) {
                if (!v.is_number_integer())
                    throw std::invalid_argument("subsets table \"" + name +
                                                "\" members must be integers");
                members.push_back(v.get<int>());
            }
            r.push_back(std::move(members));
        }
        out.push_back(std::move(r));
    }
    return out;
}

ordered_json matrix_json(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : m) rows.push_back(row);
    return rows;
}

ordered_json subset_table_json(const std::vector<std::vector<std::vector<int>>>& t) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : t) {
        ordered_json r = ordered_json::array();
        for (const auto& cell : row) r.push_back(cell);
        rows.push_back(r);
    }
    return rows;
}

ordered_json spec_json_obj(const SubshiftSpec& spec) {
    ordered_json j;
    j["N"] = spec.N;
    j["M"] = spec.M;
    j["Aminus"] = matrix_json(spec.Aminus);
    j["A"] = matrix_json(spec.A);
    j["Aplus"] = matrix_json(spec.Aplus);
    if (spec.subsets) {
        ordered_json s;
        s["minus"] = subset_table_json(spec.subsets->minus);
        s["mid"] = subset_table_json(spec.subsets->mid);
        s["plus"] = subset_table_json(spec.subsets->plus);
        j["subsets"] = s;
    }
    return j;
}

ordered_json series_json(const Series& s, int through) {
    ordered_json list = ordered_json::array();
    for (int k = 0; k <= through && k <= s.order(); ++k)
        list.push_back(rational_to_string(s.coeff(k)));
    return list;
}

ordered_json count_row_json(const std::vector<long long>& counts) {
    ordered_json list = ordered_json::array();
    for (size_t n = 1; n < counts.size(); ++n) list.push_back(counts[n]);
    return list;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

SubshiftSpec spec_from_json_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw_parse_error(text, e);
    }
    if (!j.is_object())
        throw std::invalid_argument("spec document must be a JSON object");
    SubshiftSpec spec;
    spec.N = require_int(j, "N");
    spec.M = require_int_list(j, "M");
    spec.Aminus = require_matrix(j, "Aminus");
    spec.A = require_matrix(j, "A");
    spec.Aplus = require_matrix(j, "Aplus");
    if (j.contains("subsets")) {
        if (!j["subsets"].is_object())
            throw std::invalid_argument("field \"subsets\" must be an object");
        SubsetFamily fam;
        fam.minus = require_subset_table(j["subsets"], "minus");
        fam.mid = require_subset_table(j["subsets"], "mid");
        fam.plus = require_subset_table(j["subsets"], "plus");
        spec.subsets = std::move(fam);
    }
    spec.validate();
    return spec;
}

SubshiftSpec spec_from_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open spec file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return spec_from_json_text(buffer.str());
}

std::string spec_to_json_text(const SubshiftSpec& spec) {
    return dump(spec_json_obj(spec));
}

Mat2 mat2_from_csv(const std::string& text) {
    std::vector<long long> values;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        size_t used = 0;
        long long v;
        try {
            v = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("matrix entry \"" + token +
                                        "\" is not an integer");
        }
        while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used])))
            ++used;
        if (used != token.size())
            throw std::invalid_argument("matrix entry \"" + token +
                                        "\" is not an integer");
        values.push_back(v);
    }
    if (values.size() != 4)
        throw std::invalid_argument(
            "matrix must be given as four comma-separated entries a,b,c,d");
    Mat2 m;
    m.at(0, 0) = values[0];
    m.at(0, 1) = values[1];
    m.at(1, 0) = values[2];
    m.at(1, 1) = values[3];
    return m;
}

std::string genfun_output_json(const SubshiftSpec& spec,
                               const GenFunSolution& solution, int order) {
    ordered_json j;
    j["order"] = order;
    j["classes"] = spec.N;
    ordered_json g = ordered_json::array();
    for (const Series& s : solution.g) g.push_back(series_json(s, order));
    j["g"] = g;
    return dump(j);
}

std::string zeta_output_json(const SubshiftSpec& spec, const ZetaParts& parts,
                             const ZetaParts& oracle, int order, int nmax,
                             bool ok) {
    (void)spec;
    ordered_json j;
    j["order"] = order;
    j["nmax"] = nmax;
    j["ok"] = ok;
    ordered_json z;
    z["neutral"] = series_json(parts.neutral, order);
    z["nonPositive"] = series_json(parts.nonPositive, order);
    z["nonNegative"] = series_json(parts.nonNegative, order);
    z["total"] = series_json(parts.total, order);
    j["zeta"] = z;
    ordered_json o;
    o["neutral"] = series_json(oracle.neutral, nmax);
    o["nonPositive"] = series_json(oracle.nonPositive, nmax);
    o["nonNegative"] = series_json(oracle.nonNegative, nmax);
    o["total"] = series_json(oracle.total, nmax);
    j["oracle"] = o;
    return dump(j);
}

std::string census_output_json(const PeriodicCensus& census) {
    ordered_json j;
    j["nmax"] = census.n_max;
    j["total"] = count_row_json(census.total);
    j["nonPositive"] = count_row_json(census.nonPositive);
    j["nonNegative"] = count_row_json(census.nonNegative);
    j["neutral"] = count_row_json(census.neutral);
    return dump(j);
}

std::string census_output_tsv(const PeriodicCensus& census) {
    std::ostringstream out;
    out << "n\ttotal\tnonPositive\tnonNegative\tneutral\n";
    for (int n = 1; n <= census.n_max; ++n)
        out << n << '\t' << census.total[static_cast<size_t>(n)] << '\t'
            << census.nonPositive[static_cast<size_t>(n)] << '\t'
            << census.nonNegative[static_cast<size_t>(n)] << '\t'
            << census.neutral[static_cast<size_t>(n)] << '\n';
    return out.str();
}

std::string graph_to_json(const PresentationGraph& graph) {
    ordered_json j;
    ordered_json vertices = ordered_json::array();
    for (const Word& v : graph.vertices) vertices.push_back(word_to_string(v));
    j["vertices"] = vertices;
    ordered_json edges = ordered_json::array();
    for (const PresentationEdge& e : graph.edges) {
        ordered_json edge;
        edge["from"] = e.from;
        edge["to"] = e.to;
        edge["word"] = word_to_string(e.word);
        edge["label"] = symbol_to_string(e.label);
        if (e.variantLabel)
            edge["variantLabel"] = symbol_to_string(*e.variantLabel);
        else
            edge["variantLabel"] = nullptr;
        edges.push_back(edge);
    }
    j["edges"] = edges;
    j["inDegree"] = graph.inDegree;
    j["outDegree"] = graph.outDegree;
    j["allVerticesCovered"] = graph.allVerticesCovered;
    return dump(j);
}

namespace {

ordered_json triplet_json(const Triplet& t) {
    ordered_json j;
    j["Aminus"] = mat2_to_string(t.Aminus);
    j["A"] = mat2_to_string(t.A);
    j["Aplus"] = mat2_to_string(t.Aplus);
    return j;
}

}  // namespace

std::string classification_to_json(const ClassificationReport& report) {
    ordered_json j;
    j["total"] = report.total;
    j["memberCount"] = report.memberCount;
    j["orbitCount"] = report.orbitCount;
    j["symmetryConsistent"] = report.symmetryConsistent;
    ordered_json slow;
    slow["count"] = report.slowCheckCount;
    slow["ok"] = report.slowCheckOk;
    j["slowCheck"] = slow;
    ordered_json pairings = ordered_json::array();
    for (const ListedPairingResult& p : report.listedPairings) {
        ordered_json row = triplet_json(p.triplet);
        row["headingConsistent"] = p.headingConsistent;
        row["presentation"] = p.presentation;
        row["diag4"] = p.diag4;
        row["diag6"] = p.diag6;
        row["member"] = p.member;
        pairings.push_back(row);
    }
    j["listedPairings"] = pairings;
    ordered_json orbits = ordered_json::array();
    for (const TripletOrbit& orbit : report.orbits) {
        ordered_json row;
        row["representative"] = triplet_json(orbit.representative);
        row["size"] = orbit.members.size();
        ordered_json members = ordered_json::array();
        for (const Triplet& m : orbit.members)
            members.push_back(triplet_to_string(m));
        row["members"] = members;
        ordered_json fams;
        fams["circulant"] = orbit.familyAny.circulant;
        fams["rowColumnConstant"] = orbit.familyAny.rowColumnConstant;
        fams["swapTranspose"] = orbit.familyAny.swapTranspose;
        row["families"] = fams;
        row["outsideAllFamilies"] = orbit.outsideAllFamilies;
        row["listed"] = orbit.listed;
        orbits.push_back(row);
    }
    j["orbits"] = orbits;
    return dump(j);
}

std::string classification_to_tsv(const ClassificationReport& report) {
    std::ostringstream out;
    out << "representative\tsize\tcirculant\trowColumnConstant\tswapTranspose\t"
           "outsideAllFamilies\tlisted\n";
    for (const TripletOrbit& orbit : report.orbits)
        out << triplet_to_string(orbit.representative) << '\t'
            << orbit.members.size() << '\t' << orbit.familyAny.circulant << '\t'
            << orbit.familyAny.rowColumnConstant << '\t'
            << orbit.familyAny.swapTranspose << '\t' << orbit.outsideAllFamilies
            << '\t' << orbit.listed << '\n';
    return out.str();
}

std::string canonicalize_output_json(const RelabelMap& map) {
    ordered_json j;
    j["source"] = spec_json_obj(map.source);
    j["target"] = spec_json_obj(map.target);
    auto perm_json = [](const std::vector<std::vector<std::vector<int>>>& table) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : table) {
            ordered_json r = ordered_json::array();
            for (const auto& perm : row) {
                ordered_json images = ordered_json::array();
                for (size_t m = 1; m < perm.size(); ++m) images.push_back(perm[m]);
                r.push_back(images);
            }
            rows.push_back(r);
        }
        return rows;
    };
    ordered_json maps;
    maps["minusMinus"] = perm_json(map.minusMinus);
    maps["plusMinus"] = perm_json(map.plusMinus);
    maps["plusPlus"] = perm_json(map.plusPlus);
    j["maps"] = maps;
    return dump(j);
}

}  // namespace dyckx
