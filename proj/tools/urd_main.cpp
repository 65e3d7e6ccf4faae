// urd_main.cpp — command-line front end: construct a decomposition, verify a
// document, list admissible orders, or run the brute-force oracle.
//
// Exit codes: 0 ok, 1 I/O or parse failure, 2 inadmissible (n, v),
// 3 verification failure, 4 oracle nonexistence, 5 oracle timeout.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "urd/urd.hpp"

namespace {

int run_construct(int n, long long v, const std::string& format, const std::string& out_path) {
    urd::ConstructResult res = urd::construct_urd(n, v);
    if (!res.ok()) {
        std::cerr << "inadmissible: " << urd::to_string(res.status) << " (v = " << v
                  << ", admissible orders are v = " << n << "*" << (n + 1) << "*k' + "
                  << 2 * (n + 1) << ")\n";
        return 2;
    }
    std::string text;
    if (format == "json") text = urd::serialize(*res.decomposition);
    else if (format == "dot") text = urd::to_dot(*res.decomposition);
    else text = urd::to_edge_list(*res.decomposition);
    try {
        if (out_path.empty()) std::cout << text;
        else urd::write_text_file(out_path, text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int run_verify(const std::string& in_path) {
    urd::Decomposition d;
    try {
        d = urd::parse_decomposition(urd::read_text_file(in_path));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    urd::VerificationReport rep = urd::verify_urd(d);
    if (!rep.ok) {
        const urd::Violation& first = rep.violations.front();
        std::cerr << "invalid: " << urd::to_string(first.kind) << ": " << first.witness << "\n";
        std::cerr << rep.violations.size() << " violation(s) in total\n";
        return 3;
    }
    std::cout << "ok: v=" << d.v << " n=" << d.n << " matching + " << d.star_classes.size()
              << " star classes partition all " << static_cast<long long>(d.v) * (d.v - 1) / 2
              << " edges\n";
    return 0;
}

int run_params(int n, long long max_v) {
    std::cout << "v g s k' t\n";
    for (const urd::Params& p : urd::enumerate_admissible(n, max_v))
        std::cout << p.v << " " << p.g << " " << p.s << " " << p.k_prime << " " << p.t << "\n";
    return 0;
}

int run_oracle(int n, int v, long long budget, const std::string& out_path) {
    urd::OracleResult res = urd::brute_force_urd(n, v, budget);
    switch (res.outcome) {
    case urd::OracleOutcome::none:
        std::cout << "none (no decomposition exists; " << res.nodes << " nodes)\n";
        return 4;
    case urd::OracleOutcome::timeout:
        std::cout << "timeout after " << res.nodes << " nodes\n";
        return 5;
    case urd::OracleOutcome::witness: break;
    }
    std::cout << "witness found (" << res.nodes << " nodes)\n";
    const std::string text = urd::serialize(*res.decomposition);
    try {
        if (out_path.empty()) std::cout << text;
        else urd::write_text_file(out_path, text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"decompositions of K_v into one perfect matching and uniform star factors"};
    app.require_subcommand(1);

    int n = 3;
    long long v = 0;
    long long max_v = 0;
    long long budget = 100'000'000;
    std::string format = "json";
    std::string out_path;
    std::string in_path;

    CLI::App* construct = app.add_subcommand("construct", "construct a decomposition");
    construct->add_option("--n", n, "star size (odd, >= 3)")->required();
    construct->add_option("--v", v, "number of vertices")->required();
    construct->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "dot", "edges"}));
    construct->add_option("--out", out_path, "output path (default: stdout)");

    CLI::App* verify = app.add_subcommand("verify", "verify a decomposition document");
    verify->add_option("--in", in_path, "input JSON document")->required();

    CLI::App* params = app.add_subcommand("params", "list admissible vertex counts");
    params->add_option("--n", n, "star size (odd, >= 3)")->required();
    params->add_option("--max-v", max_v, "largest v to list")->required();

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive search at tiny orders");
    oracle->add_option("--n", n, "star size (odd, >= 3)")->required();
    oracle->add_option("--v", v, "number of vertices (<= 32)")->required();
    oracle->add_option("--budget", budget, "node budget before timing out");
    oracle->add_option("--out", out_path, "witness output path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return run_construct(n, v, format, out_path);
        if (verify->parsed()) return run_verify(in_path);
        if (params->parsed()) return run_params(n, max_v);
        if (oracle->parsed()) return run_oracle(n, static_cast<int>(v), budget, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
