#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

#include "wrtk/io.hpp"
#include "wrtk/verify.hpp"

namespace {

using namespace wrtk;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_validation = 2;
constexpr int exit_io = 3;

struct CommonOpts {
    i64 a = 0, b = 0, p = 0, n = 3;
    int precision = 53;
    std::string format = "json";
    std::string output;
};

void add_spec_options(CLI::App* cmd, CommonOpts& o, bool with_n) {
    cmd->add_option("-a", o.a, "torus knot parameter a")->required();
    cmd->add_option("-b", o.b, "torus knot parameter b")->required();
    cmd->add_option("-p", o.p, "surgery coefficient p")->required();
    if (with_n) cmd->add_option("-n", o.n, "root order n (odd, >= 3)")->required();
    cmd->add_option("--precision", o.precision, "working precision in bits (default 53)");
    cmd->add_option("--format", o.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", o.output, "write output to this path instead of stdout");
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw IoError("cannot open output path: " + path);
    f << text;
    if (!f.good()) throw IoError("write failed: " + path);
}

int run_tau(const CommonOpts& o) {
    SurgerySpec spec = SurgerySpec::make(o.a, o.b, o.p, o.n);
    TauValue tau = tau_hat(spec, o.precision);
    emit(to_json(tau).dump(2) + "\n", o.output);
    return exit_ok;
}

int run_expand(const CommonOpts& o) {
    SurgerySpec spec = SurgerySpec::make(o.a, o.b, o.p, o.n);
    ExpansionReport rep = expansion_report(spec, o.precision);
    if (o.format == "csv")
        emit(expansion_csv_row(rep), o.output);
    else
        emit(with_envelope(spec, o.precision, to_json(rep, spec)).dump(2) + "\n", o.output);
    return exit_ok;
}

int run_sweep(const CommonOpts& o, i64 n_from, i64 n_to, int workers) {
    std::vector<i64> ns;
    for (i64 n = n_from % 2 == 0 ? n_from + 1 : n_from; n <= n_to; n += 2)
        if (n >= 3) ns.push_back(n);
    if (ns.empty()) throw ValidationError("empty n range");
    SweepResult sweep = convergence_sweep(o.a, o.b, o.p, ns, o.precision, workers);
    if (o.format == "csv") {
        emit(sweep_csv(sweep), o.output);
    } else {
        SurgerySpec spec = SurgerySpec::make(o.a, o.b, o.p, ns.front());
        emit(with_envelope(spec, o.precision, to_json(sweep)).dump(2) + "\n", o.output);
    }
    return exit_ok;
}

int run_verify(const std::string& only, std::uint64_t seed) {
    std::vector<CheckResult> results = run_verification(only, seed);
    if (results.empty()) {
        std::cerr << "unknown check group: " << only << "\n";
        return exit_validation;
    }
    int failures = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "ok   " : "FAIL ") << "[" << r.group << "] " << r.name;
        if (!r.detail.empty()) std::cout << " -- " << r.detail;
        std::cout << "\n";
        if (!r.pass) ++failures;
    }
    std::cout << (failures == 0 ? "all checks passed" : "checks failed") << " ("
              << results.size() - failures << "/" << results.size() << ")\n";
    return failures == 0 ? exit_ok : exit_verify_failed;
}

int run_tables(const CommonOpts& o) {
    SurgerySpec spec = SurgerySpec::make(o.a, o.b, o.p, o.n);
    emit(invariant_table_csv(spec), o.output);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"WRT invariants of surgeries on torus knots: exact values and their asymptotics"};
    app.require_subcommand(1);

    CommonOpts tau_o, expand_o, sweep_o, tables_o;
    i64 n_from = 0, n_to = 0;
    int workers = 1;
    std::string only_group;
    std::uint64_t check_seed = 0x5eed;

    auto* tau_cmd = app.add_subcommand("tau", "exact invariant at e^{4 pi i/n}");
    add_spec_options(tau_cmd, tau_o, true);

    auto* expand_cmd = app.add_subcommand("expand", "invariant, A(n), B(n) and the residual");
    add_spec_options(expand_cmd, expand_o, true);

    auto* sweep_cmd = app.add_subcommand("sweep", "residual decay over a range of odd n");
    add_spec_options(sweep_cmd, sweep_o, false);
    sweep_cmd->add_option("--n-from", n_from, "first n of the sweep")->required();
    sweep_cmd->add_option("--n-to", n_to, "last n of the sweep")->required();
    sweep_cmd->add_option("--workers", workers, "number of worker threads (default 1)");

    auto* verify_cmd = app.add_subcommand("verify", "run the golden-example and identity suites");
    verify_cmd->add_option("--only", only_group,
                           "restrict to one group: index-sets, bijections, gauss, lemmas, "
                           "dual-a, classification, torsion-cs");
    verify_cmd->add_option("--check-seed", check_seed, "seed for the randomized spot checks");

    auto* tables_cmd = app.add_subcommand("tables", "per-label invariant table as CSV");
    add_spec_options(tables_cmd, tables_o, false);

    try {
        app.parse(argc, argv);
        if (tau_cmd->parsed()) return run_tau(tau_o);
        if (expand_cmd->parsed()) return run_expand(expand_o);
        if (sweep_cmd->parsed()) return run_sweep(sweep_o, n_from, n_to, workers);
        if (verify_cmd->parsed()) return run_verify(only_group, check_seed);
        if (tables_cmd->parsed()) return run_tables(tables_o);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_validation;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_validation;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return exit_io;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    }
    return exit_ok;
}
