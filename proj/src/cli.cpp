#include "cobkit/cli.hpp"

#include <fstream>

#include "cobkit/constructions.hpp"

namespace cobkit {

namespace {

struct CliOptions {
    bool pretty = false;
    bool strict = false;
    size_t budget = kDefaultTopSimplexBudget;
    std::optional<std::string> out_path;
    std::optional<bool> assume_spin_cobordant;
    std::optional<long> chi;
};

const char* kUsage =
    "usage: cobkit <command> [args] [flags]\n"
    "\n"
    "commands:\n"
    "  invariants FILE                  compute or echo the invariants of a complex/record\n"
    "  decide KIND FILE1 FILE2          KIND: spin-pr | lorentzian | compare\n"
    "  construct OP ARGS...             OP: double | consum | product | normalize-chi\n"
    "  class FILE                       cobordism group class of a record\n"
    "\n"
    "flags:\n"
    "  --assume-spin-cobordant          declare the spin-cobordance precondition\n"
    "  --strict                         re-verify declared invariants when possible\n"
    "  --budget N                       top-simplex budget for characteristic classes\n"
    "  --pretty                         human-readable tables instead of JSON\n"
    "  --out PATH                       where `construct` writes its result\n"
    "  --chi N                          input for `construct normalize-chi`\n"
    "\n"
    "FILE arguments may also be corpus identifiers such as sphere(3), torus2,\n"
    "cp2, product(sphere(1),sphere(2)), k3 or torus(4).\n";

void pretty_print(const Json& j, std::ostream& out, int indent = 0) {
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || value.is_array()) {
                out << pad << key << ":\n";
                pretty_print(value, out, indent + 2);
            } else {
                out << pad << key << ": " << value.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        bool scalars = true;
        for (const auto& v : j)
            if (v.is_object() || v.is_array()) scalars = false;
        if (scalars) {
            out << pad << j.dump() << "\n";
        } else {
            for (const auto& v : j) pretty_print(v, out, indent);
        }
    } else {
        out << pad << j.dump() << "\n";
    }
}

void emit(const Json& report, const CliOptions& opts, std::ostream& out) {
    if (opts.pretty)
        pretty_print(report, out);
    else
        out << report.dump(2) << "\n";
}

Json make_report(const std::string& command, const std::vector<std::string>& inputs,
                 Json payload, const std::vector<std::string>& warnings) {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["payload"] = std::move(payload);
    j["warnings"] = warnings;
    return j;
}

// Invariants of a complex: the full record for closed inputs, the computable
// part otherwise.
Json complex_payload(const SimplicialComplex& c, const CliOptions& opts,
                     std::vector<std::string>& warnings) {
    ManifoldFlags flags = validate(c);
    HomologySummary h = homology(c);
    if (flags.is_closed) {
        ManifoldRecord r = from_complex(c, opts.budget);
        Json payload = record_to_json(r);
        payload["homology"] = homology_to_json(h);
        return payload;
    }
    warnings.push_back("input is not closed; spin and signature are undefined");
    Json payload;
    payload["name"] = c.name;
    payload["dim"] = c.dimension();
    payload["closed"] = false;
    payload["chi"] = h.euler_characteristic;
    payload["betti_rational"] = h.betti_rational;
    payload["betti_mod2"] = h.betti_mod2;
    if (flags.is_orientable) payload["orientable"] = *flags.is_orientable;
    payload["boundary_components"] = flags.boundary_components.size();
    payload["homology"] = homology_to_json(h);
    return payload;
}

// --strict: declared invariants of corpus-named records are recomputed from
// the corresponding complex when one exists within budget.
void strict_verify(const ManifoldRecord& r, const CliOptions& opts) {
    SimplicialComplex c;
    try {
        c = standard(r.name);
    } catch (const UnknownCorpusName&) {
        return;  // nothing to verify against
    }
    ManifoldRecord computed;
    try {
        computed = from_complex(c, opts.budget);
    } catch (const BudgetExceeded&) {
        return;
    }
    auto complain = [&](const std::string& field, const std::string& got,
                        const std::string& want) {
        throw MalformedRecord("strict mode: declared " + field + " of '" + r.name + "' is " +
                              got + " but the complex gives " + want);
    };
    if (r.spin && *r.spin != computed.spin.value_or(false))
        complain("spin", *r.spin ? "true" : "false", *computed.spin ? "true" : "false");
    if (r.chi != computed.chi)
        complain("chi", std::to_string(r.chi), std::to_string(computed.chi));
    if (r.sigma && computed.sigma && *r.sigma != *computed.sigma)
        complain("sigma", std::to_string(*r.sigma), std::to_string(*computed.sigma));
    if (r.betti_rational && computed.betti_rational &&
        *r.betti_rational != *computed.betti_rational)
        complain("betti_rational", "inconsistent", "different");
}

ManifoldRecord as_record(const Input& input, const CliOptions& opts) {
    if (std::holds_alternative<ManifoldRecord>(input)) {
        ManifoldRecord r = std::get<ManifoldRecord>(input);
        if (opts.strict) strict_verify(r, opts);
        return r;
    }
    return from_complex(std::get<SimplicialComplex>(input), opts.budget);
}

int cmd_invariants(const std::vector<std::string>& inputs, const CliOptions& opts,
                   std::ostream& out) {
    if (inputs.size() != 1) throw ParseError("invariants takes exactly one input");
    Input input = load_input(inputs[0]);
    std::vector<std::string> warnings;
    Json payload;
    if (std::holds_alternative<SimplicialComplex>(input)) {
        payload = complex_payload(std::get<SimplicialComplex>(input), opts, warnings);
    } else {
        ManifoldRecord r = std::get<ManifoldRecord>(input);
        if (opts.strict) strict_verify(r, opts);
        payload = record_to_json(r);
    }
    emit(make_report("invariants", inputs, payload, warnings), opts, out);
    return 0;
}

int cmd_decide(const std::vector<std::string>& positional, const CliOptions& opts,
               std::ostream& out) {
    if (positional.size() != 3)
        throw ParseError("decide takes a kind and two inputs");
    const std::string& kind = positional[0];
    ManifoldRecord m1 = as_record(load_input(positional[1]), opts);
    ManifoldRecord m2 = as_record(load_input(positional[2]), opts);
    Json payload;
    if (kind == "spin-pr") {
        payload = report_to_json(decide_spin_pr(m1, m2, opts.assume_spin_cobordant));
    } else if (kind == "lorentzian") {
        payload = report_to_json(decide_lorentzian(m1, m2));
    } else if (kind == "compare") {
        auto [pr, lo] = compare_cobordisms(m1, m2);
        payload["spin_pr"] = report_to_json(pr);
        payload["lorentzian"] = report_to_json(lo);
        payload["agree"] = pr.verdict == lo.verdict;
    } else {
        throw ParseError("unknown decision kind '" + kind + "'");
    }
    emit(make_report("decide " + kind, {positional[1], positional[2]}, payload, {}), opts, out);
    return 0;
}

int cmd_construct(const std::vector<std::string>& positional, const CliOptions& opts,
                  std::ostream& out) {
    if (positional.empty()) throw ParseError("construct needs an operation");
    const std::string& op = positional[0];
    std::vector<std::string> inputs(positional.begin() + 1, positional.end());
    std::vector<std::string> warnings;
    Json payload;
    std::optional<Json> artifact;

    if (op == "normalize-chi") {
        if (!opts.chi) throw ParseError("normalize-chi needs --chi N");
        auto [k1, k2] = normalize_chi_plan(*opts.chi);
        payload["chi"] = *opts.chi;
        payload["k1"] = k1;
        payload["k2"] = k2;
    } else if (op == "double") {
        if (inputs.size() != 1) throw ParseError("double takes one input");
        Input input = load_input(inputs[0]);
        if (!std::holds_alternative<SimplicialComplex>(input))
            throw ParseError("double operates on complexes");
        SimplicialComplex d = double_complex(std::get<SimplicialComplex>(input));
        payload = complex_payload(d, opts, warnings);
        artifact = complex_to_json(d);
    } else if (op == "consum" || op == "product") {
        if (inputs.size() != 2) throw ParseError(op + " takes two inputs");
        Input a = load_input(inputs[0]);
        Input b = load_input(inputs[1]);
        const bool complexes = std::holds_alternative<SimplicialComplex>(a) &&
                               std::holds_alternative<SimplicialComplex>(b);
        if (complexes) {
            const auto& ca = std::get<SimplicialComplex>(a);
            const auto& cb = std::get<SimplicialComplex>(b);
            SimplicialComplex r = (op == "consum") ? connected_sum(ca, cb) : product(ca, cb);
            payload = complex_payload(r, opts, warnings);
            artifact = complex_to_json(r);
        } else {
            ManifoldRecord ra = as_record(a, opts);
            ManifoldRecord rb = as_record(b, opts);
            ManifoldRecord r =
                (op == "consum") ? connected_sum_record(ra, rb) : product_record(ra, rb);
            payload = record_to_json(r);
            artifact = payload;
        }
    } else {
        throw ParseError("unknown construct operation '" + op + "'");
    }

    if (artifact) {
        if (opts.out_path) {
            std::ofstream f(*opts.out_path);
            if (!f) throw ParseError("cannot write '" + *opts.out_path + "'");
            f << artifact->dump(2) << "\n";
        } else {
            warnings.push_back("no --out path given; result not written");
        }
    }
    emit(make_report("construct " + op, inputs, payload, warnings), opts, out);
    return 0;
}

int cmd_class(const std::vector<std::string>& inputs, const CliOptions& opts,
              std::ostream& out) {
    if (inputs.size() != 1) throw ParseError("class takes exactly one input");
    ManifoldRecord r = as_record(load_input(inputs[0]), opts);
    Json payload = class_to_json(class_in_group(r));
    emit(make_report("class", inputs, payload, {}), opts, out);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliOptions opts;
    std::vector<std::string> positional;
    try {
        for (size_t i = 0; i < args.size(); ++i) {
            const std::string& arg = args[i];
            auto take_value = [&](const std::string& flag) -> std::string {
                if (arg.size() > flag.size() && arg[flag.size()] == '=')
                    return arg.substr(flag.size() + 1);
                if (i + 1 >= args.size()) throw ParseError(flag + " needs a value");
                return args[++i];
            };
            if (arg == "--pretty") {
                opts.pretty = true;
            } else if (arg == "--strict") {
                opts.strict = true;
            } else if (arg == "--assume-spin-cobordant") {
                opts.assume_spin_cobordant = true;
            } else if (arg.rfind("--budget", 0) == 0) {
                opts.budget = std::stoul(take_value("--budget"));
            } else if (arg.rfind("--out", 0) == 0) {
                opts.out_path = take_value("--out");
            } else if (arg.rfind("--chi", 0) == 0) {
                opts.chi = std::stol(take_value("--chi"));
            } else if (arg.rfind("--", 0) == 0) {
                throw ParseError("unknown flag '" + arg + "'");
            } else {
                positional.push_back(arg);
            }
        }
        if (positional.empty()) {
            err << kUsage;
            return 1;
        }
        const std::string command = positional.front();
        std::vector<std::string> rest(positional.begin() + 1, positional.end());
        if (command == "invariants") return cmd_invariants(rest, opts, out);
        if (command == "decide") return cmd_decide(rest, opts, out);
        if (command == "construct") return cmd_construct(rest, opts, out);
        if (command == "class") return cmd_class(rest, opts, out);
        throw ParseError("unknown command '" + command + "'");
    } catch (const PreconditionUnresolved& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cobkit
