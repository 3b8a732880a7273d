// End-to-end checks of the installed binary: exit codes, report shape,
// determinism. The binary path is injected by the build.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    if (ok) {
        std::cout << "ok: " << what << "\n";
    } else {
        std::cout << "FAIL: " << what << "\n";
        ++failures;
    }
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(COBKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer;
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    while (size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) output.append(buffer.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

nlohmann::json payload_of(const RunResult& r) {
    return nlohmann::json::parse(r.output).at("payload");
}

}  // namespace

int main() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "cobkit_cli_test";
    fs::create_directories(dir);

    {
        std::ofstream f(dir / "s3.json");
        f << R"({"name":"s3","dim":3,"closed":true,"spin":true,"orientable":true,"chi":0,
                "betti_mod2":[1,0,0,1],"betti_rational":[1,0,0,1]})";
    }
    {
        std::ofstream f(dir / "t3.json");
        f << R"({"name":"t3","dim":3,"closed":true,"spin":true,"orientable":true,"chi":0,
                "betti_mod2":[1,3,3,1],"betti_rational":[1,3,3,1]})";
    }
    {
        std::ofstream f(dir / "malformed.json");
        f << R"({"facets": [[0, 1, 2], [0, 1]]})";
    }
    {
        std::ofstream f(dir / "m13a.json");
        f << R"({"name":"m13a","dim":13,"closed":true,"spin":true,"orientable":true,"chi":0,
                "semichar_mod2":1})";
    }
    {
        std::ofstream f(dir / "m13b.json");
        f << R"({"name":"m13b","dim":13,"closed":true,"spin":true,"orientable":true,"chi":0,
                "semichar_mod2":0})";
    }

    // invariants of a small complex, computed end to end
    RunResult r = run("invariants \"sphere(3)\"");
    check(r.exit_code == 0, "invariants sphere(3) exits 0");
    auto p = payload_of(r);
    check(p.at("chi") == 0 && p.at("semichar_mod2") == 1 && p.at("spin") == true,
          "invariants sphere(3): chi 0, semichar 1, spin");

    r = run("invariants cp2");
    p = payload_of(r);
    check(p.at("chi") == 3 && p.at("sigma") == 1 && p.at("spin") == false,
          "invariants cp2: chi 3, sigma 1, not spin");

    r = run("invariants rp2");
    p = payload_of(r);
    check(p.at("homology").at("torsion")[1][0] == "2", "invariants rp2 reports torsion [2]");

    // a bounded complex still reports its computable part
    r = run("invariants \"disk(4)\"");
    check(r.exit_code == 0, "invariants disk(4) exits 0");
    p = payload_of(r);
    check(p.at("closed") == false && p.at("chi") == 1, "disk(4): open, chi 1");

    // error paths
    r = run(std::string("invariants ") + (dir / "malformed.json").string());
    check(r.exit_code == 1, "malformed input exits 1");
    r = run("invariants no_such_file.json");
    check(r.exit_code == 1, "missing file exits 1");

    // decisions
    r = run(std::string("decide spin-pr ") + (dir / "s3.json").string() + " " +
            (dir / "t3.json").string());
    check(r.exit_code == 0, "decide spin-pr exits 0");
    check(payload_of(r).at("verdict") == "No", "decide spin-pr s3 t3: No");

    r = run(std::string("decide compare ") + (dir / "s3.json").string() + " " +
            (dir / "s3.json").string());
    p = payload_of(r);
    check(p.at("agree") == true && p.at("spin_pr").at("verdict") == "Yes",
          "decide compare s3 s3: (Yes, Yes)");

    r = run(std::string("decide spin-pr ") + (dir / "m13a.json").string() + " " +
            (dir / "m13b.json").string() + " --assume-spin-cobordant");
    check(r.exit_code == 0, "resolved UnknownPerPaper exits 0");
    check(payload_of(r).at("verdict") == "UnknownPerPaper",
          "dimension-13 unequal semichars: UnknownPerPaper");

    r = run(std::string("decide spin-pr ") + (dir / "m13a.json").string() + " " +
            (dir / "m13b.json").string());
    check(r.exit_code == 2, "unresolved precondition exits 2");

    // constructions
    r = run("construct normalize-chi --chi 2");
    p = payload_of(r);
    check(p.at("k1") == 1 && p.at("k2") == 0, "normalize-chi 2 -> (1, 0)");
    r = run("construct normalize-chi --chi -6");
    p = payload_of(r);
    check(p.at("k1") == 0 && p.at("k2") == 3, "normalize-chi -6 -> (0, 3)");
    r = run("construct normalize-chi --chi 3");
    check(r.exit_code == 1, "odd chi exits 1");

    const std::string out = (dir / "double.json").string();
    r = run("construct double \"product(disk(2),sphere(2))\" --out " + out);
    check(r.exit_code == 0, "construct double exits 0");
    p = payload_of(r);
    check(p.at("chi") == 4 && p.at("closed") == true, "double of D2 x S2: closed, chi 4");
    check(fs::exists(out), "construct writes --out");
    r = run("invariants " + out);
    check(payload_of(r).at("chi") == 4, "written double re-loads with chi 4");

    r = run("construct product \"sphere(1)\" \"sphere(2)\" --out " + (dir / "s1xs2.json").string());
    p = payload_of(r);
    check(p.at("chi") == 0, "construct product s1 s2: chi 0");

    // record-level product via corpus records
    r = run("construct product \"torus(2)\" \"torus(2)\"");
    p = payload_of(r);
    check(p.at("betti_rational") == nlohmann::json::parse("[1,4,6,4,1]"),
          "record product torus(2) x torus(2) is T4");

    // classes
    r = run(std::string("class ") + (dir / "s3.json").string());
    p = payload_of(r);
    check(p.at("group") == "Z2" && p.at("value") == 1, "class s3 -> (Z2, 1)");
    r = run("class \"torus(4)\"");
    p = payload_of(r);
    check(p.at("group") == "Z" && p.at("value") == 0, "class t4 -> (Z, 0)");
    r = run("class k3");
    check(r.exit_code == 1, "class k3 ineligible exits 1");

    // determinism: identical invocations produce byte-identical reports
    RunResult a = run("invariants cp2");
    RunResult b = run("invariants cp2");
    check(a.output == b.output, "byte-identical reports");

    // pretty output is not JSON but succeeds
    r = run("invariants \"sphere(3)\" --pretty");
    check(r.exit_code == 0 && r.output.find("chi") != std::string::npos, "pretty output");

    // strict mode: a corpus-named record with a wrong declared spin flag is refused
    {
        std::ofstream f(dir / "fake_cp2.json");
        f << R"({"name":"cp2","dim":4,"closed":true,"spin":true,"orientable":true,"chi":3,
                "sigma":1})";
    }
    r = run(std::string("invariants ") + (dir / "fake_cp2.json").string());
    check(r.exit_code == 0, "declared record accepted without --strict");
    r = run(std::string("invariants ") + (dir / "fake_cp2.json").string() + " --strict");
    check(r.exit_code == 1, "strict mode rejects a false declared spin flag");

    std::cout << (failures == 0 ? "ALL OK" : "FAILURES") << "\n";
    return failures == 0 ? 0 : 1;
}
