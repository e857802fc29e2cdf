#include "monodromy/cyclotomic.hpp"
#include "monodromy/inertia.hpp"
#include "monodromy/serialize.hpp"
#include "monodromy/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using monodromy::Int;
using monodromy::OrderedJson;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitSuiteFailure = 4;

Int parse_int(const std::string& text, const std::string& what) {
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw std::invalid_argument(what + " must be an integer, got '" + text + "'");
    }
}

int dimension_cap() {
    int cap = 24;
    if (const char* env = std::getenv("MONODROMY_MAX_DIM")) {
        const std::string text(env);
        try {
            std::size_t pos = 0;
            cap = std::stoi(text, &pos);
            if (pos != text.size() || cap < 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("MONODROMY_MAX_DIM must be a positive integer, got '" +
                                        text + "'");
        }
    }
    return cap;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(out_path);
    const fs::path tmp(out_path + ".tmp");
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::invalid_argument("cannot open output file " + tmp.string());
        os << text;
        os.flush();
        if (!os) throw std::invalid_argument("cannot write output file " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string format_set(const std::vector<Int>& elems) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elems.size(); ++i) os << (i ? ", " : "") << elems[i];
    os << '}';
    return os.str();
}

std::vector<std::string> to_strings(const std::vector<Int>& elems) {
    std::vector<std::string> out;
    out.reserve(elems.size());
    for (const Int& v : elems) out.push_back(v.str());
    return out;
}

int run_nr(int r, const std::string& format, const std::string& out) {
    const monodromy::PrimePowerSet n = monodromy::n_set(r);
    const monodromy::PrimePowerSet np = monodromy::n_prime_set(r);
    const std::vector<Int> diff = n.difference(np);
    std::string text;
    if (format == "json") {
        OrderedJson j;
        j["r"] = r;
        j["n_set"] = to_strings(n.elements);
        j["n_prime_set"] = to_strings(np.elements);
        j["difference"] = to_strings(diff);
        text = monodromy::canonical_dump(j);
    } else {
        std::ostringstream os;
        os << "N(" << r << ") = " << n.to_string() << '\n';
        os << "N'(" << r << ") = " << np.to_string() << '\n';
        os << "N(" << r << ") \\ N'(" << r << ") = " << format_set(diff) << '\n';
        text = os.str();
    }
    write_output(text, out);
    return kExitOk;
}

int run_member(const std::string& ell_text, int s, const std::string& r_text,
               const std::string& n_text, const std::string& format, const std::string& out) {
    const Int ell = parse_int(ell_text, "--ell");
    const Int r = parse_int(r_text, "--r");
    const Int n = parse_int(n_text, "--n");
    const bool member = monodromy::root_minus_one_membership(ell, s, r, n);
    std::string text;
    if (format == "json") {
        OrderedJson j;
        j["ell"] = ell.str();
        j["s"] = s;
        j["r"] = r.str();
        j["n"] = n.str();
        j["member"] = member;
        text = monodromy::canonical_dump(j);
    } else {
        std::ostringstream os;
        os << "(zeta-1)^" << r << " in " << n << "*Z[zeta] for zeta of order " << ell << "^" << s
           << ": " << (member ? "true" : "false") << '\n';
        text = os.str();
    }
    write_output(text, out);
    return kExitOk;
}

int run_scan(const std::string& r_text, const std::string& n_text, int s_max, int degree_cap,
             const std::string& format, const std::string& out) {
    const Int r = parse_int(r_text, "--r");
    const Int n = parse_int(n_text, "--n");
    const auto witness = monodromy::sharpness_scan(r, n, s_max, degree_cap);
    std::string text;
    if (format == "json") {
        OrderedJson j;
        j["r"] = r.str();
        j["n"] = n.str();
        j["s_max"] = s_max;
        j["degree_cap"] = degree_cap;
        if (witness) {
            OrderedJson w;
            w["ell"] = witness->ell.str();
            w["s"] = witness->s;
            j["witness"] = w;
        } else {
            j["witness"] = nullptr;
        }
        text = monodromy::canonical_dump(j);
    } else {
        std::ostringstream os;
        if (witness)
            os << "witness: lambda of order " << witness->ell << "^" << witness->s << '\n';
        else
            os << "witness: none\n";
        text = os.str();
    }
    write_output(text, out);
    return kExitOk;
}

monodromy::InertiaRep load_rep(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::invalid_argument("cannot read representation file " + path);
    OrderedJson j;
    try {
        j = OrderedJson::parse(is);
    } catch (const std::exception& e) {
        throw std::invalid_argument("representation file " + path + " is not valid JSON: " +
                                    e.what());
    }
    return monodromy::rep_from_json(j);
}

std::string classification_text(const monodromy::Classification& c) {
    std::ostringstream os;
    os << "verdict: " << monodromy::verdict_name(c.verdict) << '\n';
    os << "theorem: " << c.theorem << '\n';
    os << "reason: " << c.reason << '\n';
    os << "evidence: " << c.evidence.size() << " records\n";
    for (const auto& e : c.evidence)
        os << "  " << (e.pass ? "pass" : "FAIL") << "  " << e.test << "  word=" << e.word << '\n';
    return os.str();
}

int run_classify(const std::string& file, int k, int r, const std::string& n_text,
                 unsigned long long cap, int word_bound, const std::string& format,
                 const std::string& out) {
    const monodromy::InertiaRep rep = load_rep(file);
    const int max_dim = dimension_cap();
    if (rep.dim > max_dim)
        throw monodromy::ResourceCapError(
            "representation dimension " + std::to_string(rep.dim) + " exceeds the cap " +
            std::to_string(max_dim) + "; set MONODROMY_MAX_DIM to raise it");
    const Int n = parse_int(n_text, "--n");
    monodromy::ClassifyOptions opts;
    opts.closure_cap = static_cast<std::size_t>(cap);
    opts.word_bound = word_bound;
    const monodromy::Classification c = monodromy::classify(rep, k, r, n, opts);
    std::string text = format == "json"
                           ? monodromy::canonical_dump(monodromy::classification_to_json(c))
                           : classification_text(c);
    write_output(text, out);
    return kExitOk;
}

std::string suites_text(const std::vector<monodromy::SuiteReport>& reports) {
    std::ostringstream os;
    int failed = 0;
    for (const auto& r : reports) {
        os << "suite " << r.suite << ": " << r.passes << "/" << r.cases
           << " checks passed, seed=" << r.seed << ", wall=" << std::fixed
           << std::setprecision(1) << r.wall_ms << " ms\n";
        for (const auto& note : r.notes) os << "  note: " << note << '\n';
        for (const auto& f : r.failures) {
            os << "  FAIL " << f.case_id << ": " << f.detail << '\n';
            ++failed;
        }
        failed += r.passed() ? 0 : 0;
    }
    int bad_suites = 0;
    for (const auto& r : reports)
        if (!r.passed()) ++bad_suites;
    if (bad_suites == 0)
        os << "verification: " << reports.size() << " suite runs, all passed\n";
    else
        os << "verification: " << bad_suites << " of " << reports.size()
           << " suite runs failed\n";
    return os.str();
}

int run_verify(const std::string& name, std::uint64_t seed, const std::string& format,
               const std::string& out) {
    std::vector<monodromy::SuiteReport> reports;
    if (name == "all") {
        for (const std::string& suite : monodromy::suite_names()) {
            auto batch = monodromy::run_suite(suite, seed);
            reports.insert(reports.end(), batch.begin(), batch.end());
        }
    } else {
        reports = monodromy::run_suite(name, seed);
    }
    std::string text;
    if (format == "json") {
        OrderedJson arr = OrderedJson::array();
        for (const auto& r : reports) arr.push_back(monodromy::suite_report_to_json(r));
        text = monodromy::canonical_dump(arr);
    } else {
        text = suites_text(reports);
    }
    write_output(text, out);
    for (const auto& r : reports)
        if (!r.passed()) return kExitSuiteFailure;
    return kExitOk;
}

int run_gen(const std::string& family, int d, int a, const std::string& ell_text,
            std::uint64_t seed, const std::string& out) {
    monodromy::InertiaRep rep;
    if (family == "semistable") {
        rep = monodromy::gen_semistable_family(d, seed);
    } else if (family == "briefly-unstable") {
        rep = monodromy::gen_briefly_unstable_family(d, seed);
    } else if (family == "example62") {
        const Int ell = parse_int(ell_text, "--ell");
        if (ell == 2)
            throw std::invalid_argument(
                "family example62 needs an odd prime --ell (the companion construction has no "
                "order-2 case); use family example62q for the quadratic variant");
        rep = monodromy::gen_example62(ell, a);
    } else if (family == "example62q") {
        rep = monodromy::gen_example62_quadratic(a);
    } else {
        throw std::invalid_argument("unknown family '" + family +
                                    "'; choose semistable, briefly-unstable, example62, or "
                                    "example62q");
    }
    write_output(monodromy::canonical_dump(monodromy::rep_to_json(rep)), out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact integer linear algebra for inertia monodromy patterns: exceptional modulus "
        "sets, cyclotomic membership bounds, exterior-power classification, and brute-force "
        "verification suites."};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    // nr
    int nr_r = 1;
    std::string nr_format = "text";
    std::string nr_out;
    CLI::App* nr = app.add_subcommand(
        "nr", "Print the exceptional modulus sets N(r), N'(r) and their difference");
    nr->add_option("r", nr_r, "Exponent r >= 1")->required();
    nr->add_option("--format", nr_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    nr->add_option("--out", nr_out, "Write output to this file (atomic)");
    nr->callback([&]() { exit_code = run_nr(nr_r, nr_format, nr_out); });

    // bounds
    CLI::App* bounds =
        app.add_subcommand("bounds", "Cyclotomic membership tests and sharpness scans");
    bounds->require_subcommand(1);

    std::string mem_ell, mem_r, mem_n, mem_format = "text", mem_out;
    int mem_s = 1;
    CLI::App* member = bounds->add_subcommand(
        "member", "Test whether (zeta-1)^r lies in n*Z[zeta] for zeta of order ell^s");
    member->add_option("--ell", mem_ell, "Prime ell")->required();
    member->add_option("--s", mem_s, "Power s >= 1 (order of zeta is ell^s)")->required();
    member->add_option("--r", mem_r, "Exponent r >= 0")->required();
    member->add_option("--n", mem_n, "Modulus n >= 1")->required();
    member->add_option("--format", mem_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    member->add_option("--out", mem_out, "Write output to this file (atomic)");
    member->callback(
        [&]() { exit_code = run_member(mem_ell, mem_s, mem_r, mem_n, mem_format, mem_out); });

    std::string scan_r, scan_n, scan_format = "text", scan_out;
    int scan_smax = 6, scan_degree_cap = 100;
    CLI::App* scan = bounds->add_subcommand(
        "scan", "Search prime-power orders for a root of unity lambda != 1 with (lambda-1)^r "
                "in n*Z[lambda]");
    scan->add_option("--r", scan_r, "Exponent r >= 1")->required();
    scan->add_option("--n", scan_n, "Modulus n >= 2")->required();
    scan->add_option("--s-max", scan_smax, "Largest prime power exponent s to try");
    scan->add_option("--degree-cap", scan_degree_cap, "Skip orders whose phi exceeds this");
    scan->add_option("--format", scan_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    scan->add_option("--out", scan_out, "Write output to this file (atomic)");
    scan->callback([&]() {
        exit_code = run_scan(scan_r, scan_n, scan_smax, scan_degree_cap, scan_format, scan_out);
    });

    // classify
    std::string cls_file, cls_n, cls_format = "text", cls_out;
    int cls_k = 0, cls_r = 0, cls_word_bound = 8;
    unsigned long long cls_cap = 20000;
    CLI::App* classify = app.add_subcommand(
        "classify", "Classify a representation file at wedge degree k, exponent r, modulus n");
    classify->add_option("file", cls_file, "Representation JSON file")->required();
    classify->add_option("--k", cls_k, "Wedge degree, 1 <= k < dim")->required();
    classify->add_option("--r", cls_r, "Exponent, r > k")->required();
    classify->add_option("--n", cls_n, "Modulus n >= 1")->required();
    classify->add_option("--cap", cls_cap, "Closure element cap");
    classify->add_option("--word-bound", cls_word_bound, "Power bound for wild*tame^i slices");
    classify->add_option("--format", cls_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    classify->add_option("--out", cls_out, "Write output to this file (atomic)");
    classify->callback([&]() {
        exit_code = run_classify(cls_file, cls_k, cls_r, cls_n, cls_cap, cls_word_bound,
                                 cls_format, cls_out);
    });

    // verify
    std::string ver_name, ver_format = "text", ver_out;
    std::uint64_t ver_seed = 0;
    CLI::App* verify =
        app.add_subcommand("verify", "Run a named verification suite, or 'all'");
    verify->add_option("name", ver_name, "Suite name or 'all'")->required();
    verify->add_option("--seed", ver_seed, "Seed for randomized suites");
    verify->add_option("--format", ver_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", ver_out, "Write output to this file (atomic)");
    verify->callback(
        [&]() { exit_code = run_verify(ver_name, ver_seed, ver_format, ver_out); });

    // gen
    std::string gen_family, gen_ell = "3", gen_out;
    int gen_d = 2, gen_a = 1;
    std::uint64_t gen_seed = 0;
    CLI::App* gen =
        app.add_subcommand("gen", "Generate a representation file from a named family");
    gen->add_option("family", gen_family,
                    "semistable | briefly-unstable | example62 | example62q")
        ->required();
    gen->add_option("--d", gen_d, "Half-dimension for the symplectic families");
    gen->add_option("--a", gen_a, "Identity block half-size for the example62 families");
    gen->add_option("--ell", gen_ell, "Odd prime for example62");
    gen->add_option("--seed", gen_seed, "Seed for the randomized families");
    gen->add_option("--out", gen_out, "Write the representation file here (atomic)");
    gen->callback([&]() {
        exit_code = run_gen(gen_family, gen_d, gen_a, gen_ell, gen_seed, gen_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    } catch (const monodromy::ResourceCapError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return exit_code;
}
