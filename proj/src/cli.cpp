#include "korb/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "korb/eichler.hpp"
#include "korb/json_io.hpp"
#include "korb/verify.hpp"

namespace korb::cli {

namespace {

// input that fails before it reaches the mathematics: exit code 2
struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ZVec parse_coords(const std::string& text, int expected, const char* what) {
    ZVec v;
    try {
        v = coords_from_string(text);
    } catch (const std::invalid_argument& ex) {
        throw MalformedInput(std::string(what) + ": " + ex.what());
    }
    if (expected > 0 && (int)v.size() != expected)
        throw MalformedInput(std::string(what) + ": expected " + std::to_string(expected) +
                             " coordinates, got " + std::to_string(v.size()));
    return v;
}

GramLattice lattice_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open lattice file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& ex) {
        throw MalformedInput("lattice file '" + path + "' is not valid JSON: " + ex.what());
    }
    try {
        return lattice_from_json(j);
    } catch (const std::invalid_argument& ex) {
        throw MalformedInput("lattice file '" + path + "': " + ex.what());
    }
}

struct Options {
    int n = 0;
    bool allow_n1 = false;
    std::string vector_text, v1_text, v2_text, v_text, w_text;
    long long square = 0;
    int k = 0;
    bool reduced = false;
    long long pa = 0;
    long long dmax = 50;
    std::string lattice_file;
    std::string suite;
    long long bound = 0;
};

Json run_normal_form(const Options& o) {
    ZVec h = parse_coords(o.vector_text, 7, "--vector");
    return polarization_json(normal_form(o.n, h, o.allow_n1));
}

Json run_equivalent(const Options& o) {
    ZVec h1 = parse_coords(o.v1_text, 7, "--v1");
    ZVec h2 = parse_coords(o.v2_text, 7, "--v2");
    PolarizationType p1 = normal_form(o.n, h1, o.allow_n1);
    PolarizationType p2 = normal_form(o.n, h2, o.allow_n1);
    Json j;
    j["equivalent"] = (p1 == p2);
    j["normal_form_1"] = polarization_json(p1);
    j["normal_form_2"] = polarization_json(p2);
    return j;
}

Json run_orbits(const Options& o) {
    Json out = Json::array();
    for (const PolarizationType& p : orbit_enumerate(o.n, Int((long)o.square)))
        out.push_back(polarization_json(p));
    return out;
}

Json run_divisors(const Options& o) {
    std::vector<int> ks;
    if (o.k > 0) {
        ks.push_back(o.k);
    } else {
        for (int k = 1; k <= o.n + 1; ++k) ks.push_back(k);
    }
    Json out = Json::array();
    for (int k : ks) {
        for (bool reduced : o.reduced ? std::vector<bool>{true} : std::vector<bool>{false, true}) {
            Int pa = o.pa > 0 ? Int((long)o.pa) : Int(k) + 2;
            out.push_back(divisor_json(uniruled_divisor_class(o.n, k, pa, reduced)));
        }
    }
    return out;
}

Json run_coverage(const Options& o) { return coverage_json(coverage(o.n, Int((long)o.dmax))); }

Json run_eichler_map(const Options& o) {
    GramLattice L = lattice_from_file(o.lattice_file);
    ZVec v = parse_coords(o.v_text, L.rank(), "--v");
    ZVec w = parse_coords(o.w_text, L.rank(), "--w");
    require_u2_prefix(L);
    if (!is_primitive(v) || !is_primitive(w))
        throw std::invalid_argument("both vectors must be primitive");
    if (L.q(v) != L.q(w))
        throw std::invalid_argument("squares differ: " + L.q(v).get_str() + " vs " + L.q(w).get_str());
    if (disc_class(L, v) != disc_class(L, w))
        throw std::invalid_argument("squares agree but the discriminant classes differ");
    return isometry_json(construct_isometry(L, v, w));
}

Json run_disc_group(const Options& o) {
    if ((o.n > 0) == !o.lattice_file.empty())
        throw MalformedInput("pass exactly one of --n and --lattice");
    GramLattice L = o.n > 0 ? kummer_lattice(o.n) : lattice_from_file(o.lattice_file);
    return disc_group_json(L);
}

Json suite_json(const SuiteResult& r) {
    Json j;
    j["suite"] = r.suite;
    j["passed"] = r.passed;
    j["checked"] = r.checked;
    Json cex = Json::array();
    for (const std::string& c : r.counterexamples) cex.push_back(c);
    j["counterexamples"] = std::move(cex);
    return j;
}

SuiteResult run_suite(const Options& o) {
    if (o.suite == "transvections")
        return verify_transvections(o.n > 0 ? o.n : 2, o.bound > 0 ? o.bound : 1000, 0x5eed0001);
    if (o.suite == "faithfulness")
        return verify_faithfulness(o.n > 0 ? o.n : 2, o.bound > 0 ? (int)o.bound : 2);
    if (o.suite == "coverage")
        return verify_coverage(o.n > 0 ? o.n : 2, Int(o.bound > 0 ? (long)o.bound : 50));
    if (o.suite == "snf")
        return verify_snf(o.n > 0 ? o.n : 5, o.bound > 0 ? (int)o.bound : 9, 200, 0x5eed0002);
    throw MalformedInput("unknown suite '" + o.suite + "' (expected transvections|faithfulness|coverage|snf)");
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact lattice classification of polarized generalized Kummer deformations", "korb"};
    app.require_subcommand(1);
    Options o;

    auto add_n = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--n", o.n, "n, with lattice U^3 + <-2n-2>");
        if (required) opt->required();
    };

    CLI::App* nf = app.add_subcommand("normal-form", "classify a primitive positive-square vector");
    add_n(nf);
    nf->add_option("--vector", o.vector_text, "7 comma-separated coordinates (u1,f1,u2,f2,u3,f3,e)")->required();
    nf->add_flag("--allow-n1", o.allow_n1, "run the arithmetic at n = 1 despite the theorem hypothesis");

    CLI::App* eq = app.add_subcommand("equivalent", "compare two vectors through their normal forms");
    add_n(eq);
    eq->add_option("--v1", o.v1_text, "first vector")->required();
    eq->add_option("--v2", o.v2_text, "second vector")->required();
    eq->add_flag("--allow-n1", o.allow_n1, "run the arithmetic at n = 1 despite the theorem hypothesis");

    CLI::App* orb = app.add_subcommand("orbits", "enumerate all types with a given square");
    add_n(orb);
    orb->add_option("--square", o.square, "even positive square")->required();

    CLI::App* divs = app.add_subcommand("divisors", "uniruled divisor classes of the rational-curve families");
    add_n(divs);
    divs->add_option("--k", o.k, "restrict to one k in 1..n+1");
    divs->add_flag("--reduced", o.reduced, "only the reduced (two-component) curve family");
    divs->add_option("--pa", o.pa, "arithmetic genus of H_A (default k+2)");

    CLI::App* cov = app.add_subcommand("coverage", "match every polarization type with a divisor witness");
    add_n(cov);
    cov->add_option("--dmax", o.dmax, "largest half-square 2d to scan")->required();

    CLI::App* em = app.add_subcommand("eichler-map", "isometry carrying v to w through transvections");
    em->add_option("--lattice", o.lattice_file, "JSON file with {\"rank\", \"gram\"}")->required();
    em->add_option("--v", o.v_text, "source vector")->required();
    em->add_option("--w", o.w_text, "target vector")->required();

    CLI::App* dg = app.add_subcommand("disc-group", "discriminant group of a lattice");
    add_n(dg, /*required=*/false);
    dg->add_option("--lattice", o.lattice_file, "JSON file with {\"rank\", \"gram\"}");

    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", o.suite, "transvections|faithfulness|coverage|snf")->required();
    ver->add_option("--bound", o.bound, "suite-specific size (count, coordinate bound, dmax, entry bound)");
    add_n(ver, /*required=*/false);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return 0;
    } catch (const CLI::ParseError& ex) {
        err << ex.what() << "\n";
        return 2;
    }

    Json envelope;
    try {
        Json result;
        int code = 0;
        if (nf->parsed()) result = run_normal_form(o);
        else if (eq->parsed()) result = run_equivalent(o);
        else if (orb->parsed()) result = run_orbits(o);
        else if (divs->parsed()) result = run_divisors(o);
        else if (cov->parsed()) result = run_coverage(o);
        else if (em->parsed()) result = run_eichler_map(o);
        else if (dg->parsed()) result = run_disc_group(o);
        else {
            SuiteResult sr = run_suite(o);
            result = suite_json(sr);
            if (!sr.passed) {
                envelope["ok"] = false;
                envelope["result"] = std::move(result);
                envelope["error"] = "verification failed";
                out << envelope.dump() << "\n";
                return 1;
            }
        }
        envelope["ok"] = true;
        envelope["result"] = std::move(result);
        out << envelope.dump() << "\n";
        return code;
    } catch (const MalformedInput& ex) {
        err << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        envelope["ok"] = false;
        envelope["result"] = nullptr;
        envelope["error"] = ex.what();
        out << envelope.dump() << "\n";
        return 1;
    }
}

}  // namespace korb::cli
