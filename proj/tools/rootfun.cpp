#include "rootfun/io.hpp"
#include "rootfun/oracle.hpp"
#include "rootfun/solver.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum Exit : int {
    ok = 0,
    verification_failed = 1,
    not_zero_dimensional = 2,
    bad_input = 3,
    oracle_disagreement = 4,
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw rootfun::Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

unsigned threads_from_env() {
    const char* env = std::getenv("ROOTFUN_THREADS");
    if (env == nullptr || *env == '\0') return 1;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0') {
        std::cerr << "rootfun: ignoring malformed ROOTFUN_THREADS='" << env << "'\n";
        return 1;
    }
    return static_cast<unsigned>(v);
}

// Parse errors and invalid systems share exit code 3.
std::optional<rootfun::ParsedSystem> load(const std::string& path) {
    try {
        return rootfun::parse_system(read_file(path));
    } catch (const rootfun::Error& e) {
        std::cerr << path << ": " << e.what() << '\n';
        return std::nullopt;
    }
}

int cmd_solve(const std::string& path, const std::string& out, bool verify, bool no_fast_path) {
    auto parsed = load(path);
    if (!parsed) return bad_input;

    rootfun::SolveOptions opts;
    opts.fast_path = !no_fast_path;
    opts.verify = verify;
    opts.threads = threads_from_env();

    rootfun::SolveResult result;
    try {
        result = rootfun::solve(parsed->system, opts);
    } catch (const rootfun::NotZeroDimensional& e) {
        std::cerr << "NotZeroDimensional: " << e.what() << " (rank deficit " << e.rank_deficit() << ")\n";
        return not_zero_dimensional;
    } catch (const rootfun::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    }

    const auto cert = rootfun::make_certificate(parsed->file.variables, parsed->system, result, verify);
    std::cout << (out == "text" ? rootfun::write_text_report(cert) : rootfun::write_certificate_json(cert));
    if (verify && !result.verification.all_passed()) {
        for (const auto& c : result.verification.checks)
            if (!c.passed) std::cerr << "verification failed: " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
        return verification_failed;
    }
    return ok;
}

int cmd_oracle(const std::string& path, std::uint32_t delta_max, std::uint32_t slack, bool no_fast_path) {
    auto parsed = load(path);
    if (!parsed) return bad_input;
    if (parsed->file.roots.empty()) {
        std::cerr << path << ": fixture lists no 'root:' lines\n";
        return bad_input;
    }
    const auto checks = rootfun::oracle_checks(rootfun::to_fixture(*parsed), delta_max, slack, !no_fast_path);
    bool all = true;
    std::size_t width = 0;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    for (const auto& c : checks) {
        all = all && c.passed;
        std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << std::string(width - c.name.size(), ' ');
        if (!c.detail.empty()) std::cout << "  " << c.detail;
        std::cout << '\n';
    }
    std::cout << (all ? "oracle: all checks passed\n" : "oracle: disagreement\n");
    return all ? ok : oracle_disagreement;
}

int cmd_check(const std::string& path) {
    rootfun::Certificate cert;
    try {
        cert = rootfun::read_certificate_json(read_file(path));
    } catch (const rootfun::Error& e) {
        std::cerr << path << ": " << e.what() << '\n';
        return bad_input;
    }
    rootfun::VerificationReport report;
    try {
        report = rootfun::recheck_certificate(cert);
    } catch (const rootfun::Error& e) {
        std::cerr << path << ": " << e.what() << '\n';
        return bad_input;
    }
    for (const auto& c : report.checks) std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << '\n';
    return report.all_passed() ? ok : verification_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Root functionals of zero-dimensional polynomial systems"};
    app.require_subcommand(1);

    std::string solve_path;
    std::string out = "json";
    bool verify = false;
    bool no_fast_path = false;
    auto* solve = app.add_subcommand("solve", "Compute root functionals, the ideal slice and the unit functional");
    solve->add_option("file", solve_path, "System file")->required();
    solve->add_option("--out", out, "Output format")->check(CLI::IsMember({"json", "text"}));
    solve->add_flag("--verify", verify, "Run the invariant suite and embed its report");
    solve->add_flag("--no-fast-path", no_fast_path, "Form every power product instead of iterating spans");

    std::string oracle_path;
    std::uint32_t delta_max = 2;
    std::uint32_t slack = 4;
    bool oracle_literal = false;
    auto* oracle = app.add_subcommand("oracle", "Compare the solver with independent oracles on a fixture");
    oracle->add_option("fixture", oracle_path, "Fixture file with root: lines")->required();
    oracle->add_option("--delta-max", delta_max, "Largest degree shift for the slice growth check");
    oracle->add_option("--slack", slack, "Saturation slack");
    oracle->add_flag("--no-fast-path", oracle_literal, "Solve with the literal power route");

    std::string cert_path;
    auto* check = app.add_subcommand("check", "Re-check a JSON certificate without solving");
    check->add_option("certificate", cert_path, "Certificate file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : bad_input;
    }

    if (solve->parsed()) return cmd_solve(solve_path, out, verify, no_fast_path);
    if (oracle->parsed()) return cmd_oracle(oracle_path, delta_max, slack, oracle_literal);
    return cmd_check(cert_path);
}
