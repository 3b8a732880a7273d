#pragma once

#include <json.hpp>

#include <variant>

#include "cobkit/oracle.hpp"

namespace cobkit {

using Json = nlohmann::json;

Json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const Json& j);  // throws ParseError

Json record_to_json(const ManifoldRecord& r);
ManifoldRecord record_from_json(const Json& j);  // throws ParseError

Json report_to_json(const DecisionReport& report);
Json class_to_json(const CobordismClass& cls);
Json homology_to_json(const HomologySummary& h);

using Input = std::variant<SimplicialComplex, ManifoldRecord>;

// Parses a JSON value as a complex (when it has "facets") or a record.
Input input_from_json(const Json& j);

// Loads an input from a file path; a non-existent path is retried as a corpus
// identifier (complex first, then record).
Input load_input(const std::string& path_or_name);

}  // namespace cobkit
