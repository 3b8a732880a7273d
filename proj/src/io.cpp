#include "cobkit/io.hpp"

#include <filesystem>
#include <fstream>

#include "cobkit/constructions.hpp"

namespace cobkit {

Json complex_to_json(const SimplicialComplex& c) {
    Json j;
    j["dim"] = c.dimension();
    j["facets"] = Json::array();
    for (const Simplex& f : c.facets) j["facets"].push_back(f);
    if (c.orientation) j["orientation"] = *c.orientation;
    if (!c.name.empty()) j["name"] = c.name;
    return j;
}

SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("facets"))
        throw ParseError("complex object needs a 'facets' array");
    SimplicialComplex c;
    try {
        for (const auto& facet : j.at("facets")) {
            Simplex s;
            for (const auto& v : facet) s.push_back(v.get<int>());
            c.facets.push_back(std::move(s));
        }
        if (j.contains("orientation"))
            c.orientation = j.at("orientation").get<std::vector<int>>();
        if (j.contains("name")) c.name = j.at("name").get<std::string>();
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad complex JSON: ") + e.what());
    }
    Vertex max_vertex = -1;
    for (const Simplex& f : c.facets)
        for (Vertex v : f) {
            if (v < 0) throw ParseError("facet vertices must be non-negative");
            max_vertex = std::max(max_vertex, v);
        }
    c.vertex_count = max_vertex + 1;
    try {
        normalize_and_check(c);
    } catch (const MalformedComplex& e) {
        throw ParseError(e.what());
    }
    if (j.contains("dim")) {
        const int declared = j.at("dim").get<int>();
        if (declared != c.dimension())
            throw ParseError("declared dim " + std::to_string(declared) +
                             " does not match the facets (dimension " +
                             std::to_string(c.dimension()) + ")");
    }
    return c;
}

Json record_to_json(const ManifoldRecord& r) {
    Json j;
    j["name"] = r.name;
    j["dim"] = r.dimension;
    j["closed"] = r.closed;
    j["chi"] = r.chi;
    if (r.orientable) j["orientable"] = *r.orientable;
    if (r.spin) j["spin"] = *r.spin;
    if (r.betti_mod2) j["betti_mod2"] = *r.betti_mod2;
    if (r.betti_rational) j["betti_rational"] = *r.betti_rational;
    if (r.semichar_mod2) j["semichar_mod2"] = *r.semichar_mod2;
    if (r.semichar_rational) j["semichar_rational"] = *r.semichar_rational;
    if (r.sigma) j["sigma"] = *r.sigma;
    if (r.w_top_minus_one_trivial) j["w_top_minus_one_trivial"] = *r.w_top_minus_one_trivial;
    if (!r.provenance.empty()) j["provenance"] = r.provenance;
    return j;
}

ManifoldRecord record_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim"))
        throw ParseError("record object needs at least 'dim'");
    ManifoldRecord r;
    try {
        r.dimension = j.at("dim").get<int>();
        if (j.contains("name")) r.name = j.at("name").get<std::string>();
        r.closed = j.value("closed", true);
        r.chi = j.value("chi", 0L);
        if (j.contains("orientable")) r.orientable = j.at("orientable").get<bool>();
        if (j.contains("spin")) r.spin = j.at("spin").get<bool>();
        if (j.contains("betti_mod2"))
            r.betti_mod2 = j.at("betti_mod2").get<std::vector<long>>();
        if (j.contains("betti_rational"))
            r.betti_rational = j.at("betti_rational").get<std::vector<long>>();
        if (j.contains("semichar_mod2")) r.semichar_mod2 = j.at("semichar_mod2").get<int>();
        if (j.contains("semichar_rational"))
            r.semichar_rational = j.at("semichar_rational").get<int>();
        if (j.contains("sigma")) r.sigma = j.at("sigma").get<long>();
        if (j.contains("w_top_minus_one_trivial"))
            r.w_top_minus_one_trivial = j.at("w_top_minus_one_trivial").get<bool>();
        if (j.contains("provenance"))
            r.provenance = j.at("provenance").get<std::map<std::string, std::string>>();
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad record JSON: ") + e.what());
    }
    if (r.provenance.empty()) {
        // unlabelled sources are treated as declared data
        for (const char* f : {"closed", "orientable", "spin", "chi", "betti_mod2",
                              "betti_rational", "semichar_mod2", "semichar_rational", "sigma",
                              "w_top_minus_one_trivial"})
            r.provenance[f] = "declared";
    }
    try {
        validate_record(r);
    } catch (const MalformedRecord& e) {
        throw ParseError(e.what());
    }
    return r;
}

Json report_to_json(const DecisionReport& report) {
    Json j;
    j["verdict"] = to_string(report.verdict);
    j["rule"] = report.rule;
    j["evidence"] = report.evidence;
    j["preconditions_used"] = report.preconditions_used;
    return j;
}

Json class_to_json(const CobordismClass& cls) {
    Json j;
    j["dim"] = cls.dimension;
    j["group"] = to_string(cls.group);
    j["value"] = cls.value;
    return j;
}

Json homology_to_json(const HomologySummary& h) {
    Json j;
    j["betti_rational"] = h.betti_rational;
    j["betti_mod2"] = h.betti_mod2;
    j["chi"] = h.euler_characteristic;
    Json torsion = Json::array();
    for (const auto& degree : h.torsion) {
        Json list = Json::array();
        for (const Int& d : degree) list.push_back(d.get_str());
        torsion.push_back(list);
    }
    j["torsion"] = torsion;
    return j;
}

Input input_from_json(const Json& j) {
    if (j.is_object() && j.contains("facets")) return complex_from_json(j);
    return record_from_json(j);
}

Input load_input(const std::string& path_or_name) {
    if (std::filesystem::exists(path_or_name)) {
        std::ifstream in(path_or_name);
        if (!in) throw ParseError("cannot open '" + path_or_name + "'");
        Json j;
        try {
            in >> j;
        } catch (const Json::exception& e) {
            throw ParseError("invalid JSON in '" + path_or_name + "': " + e.what());
        }
        return input_from_json(j);
    }
    // corpus identifiers as a convenience: complexes first, then records
    try {
        return standard(path_or_name);
    } catch (const UnknownCorpusName&) {
    }
    try {
        return standard_record(path_or_name);
    } catch (const UnknownCorpusName&) {
    }
    throw ParseError("'" + path_or_name + "' is neither a file nor a corpus identifier");
}

}  // namespace cobkit
