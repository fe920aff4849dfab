#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dyckx/genfun.hpp"
#include "dyckx/kernel.hpp"
#include "dyckx/presentations.hpp"
#include "dyckx/zeta.hpp"

namespace dyckx {

// JSON syntax error with 1-based position information.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& message, int line, int column);
};

// Parses the spec document { "N", "M", "Aminus", "A", "Aplus", "subsets"? }.
// Throws ParseError on malformed JSON and std::invalid_argument on documents
// that parse but violate the spec restrictions.
SubshiftSpec spec_from_json_text(const std::string& text);
SubshiftSpec spec_from_json_file(const std::string& path);

std::string spec_to_json_text(const SubshiftSpec& spec);

// Row-major 2x2 matrix from "a,b,c,d".
Mat2 mat2_from_csv(const std::string& text);

// ---- command output builders (all deterministic) ----

std::string genfun_output_json(const SubshiftSpec& spec,
                               const GenFunSolution& solution, int order);

std::string zeta_output_json(const SubshiftSpec& spec, const ZetaParts& parts,
                             const ZetaParts& oracle, int order, int nmax,
                             bool ok);

std::string census_output_json(const PeriodicCensus& census);
std::string census_output_tsv(const PeriodicCensus& census);

std::string graph_to_json(const PresentationGraph& graph);

std::string classification_to_json(const ClassificationReport& report);
std::string classification_to_tsv(const ClassificationReport& report);

std::string canonicalize_output_json(const RelabelMap& map);

}  // namespace dyckx
