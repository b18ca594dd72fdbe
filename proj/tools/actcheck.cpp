#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "act/acceptance.hpp"
#include "act/report.hpp"
#include "act/scan.hpp"
#include "act/tensor_io.hpp"
#include "act/version.hpp"

namespace {

// Exit codes: 0 success, 1 property violation (an expected finding),
// 2 input error, 3 internal cross-validation inconsistency (library bug).
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitInconsistent = 3;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("ACTCHECK_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            std::cerr << "warning: ignoring unparsable ACTCHECK_SEED\n";
        }
    }
    return 1;
}

std::string timestamp_now() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[64];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

int run_validate(const std::string& path) {
    try {
        act::LoadedTensor t = act::load_tensor_file(path);
        std::cout << "all curvature symmetries hold exactly (" << t.space().signature_str() << ", n="
                  << t.space().n << ")\n";
        return kExitOk;
    } catch (const act::symmetry_violation_error& e) {
        std::cout << "symmetry violations:\n";
        for (const auto& v : e.report.violations) std::cout << "  " << v.to_string() << "\n";
        std::cout << e.report.violations.size() << " violated quadruples\n";
        return kExitViolation;
    } catch (const act::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
}

template <class K>
int report_for(const act::CurvatureTensor<K>& tensor, const act::CheckParams& params,
               const nlohmann::json& desc, const std::string& out_path) {
    act::FullReport<K> rep = act::full_report(tensor, params);
    nlohmann::json j = act::render_report(rep, desc, timestamp_now());
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write report file: " << out_path << "\n";
            return kExitInput;
        }
        out << j.dump(2) << "\n";
    }
    std::cout << "osserman:        " << to_string(rep.osserman.verdict) << "\n"
              << "jordan-osserman: " << to_string(rep.jordan_osserman.verdict) << "\n"
              << "semisimple:      " << to_string(rep.semisimple.verdict) << "\n"
              << "duality:         " << to_string(rep.duality.verdict) << " ("
              << rep.duality.pairs_checked << " pairs, " << rep.duality.flagged_null_pairs
              << " flagged null)\n";
    if (rep.minimal_poly.applicable)
        std::cout << "minimal-poly:    " << (rep.minimal_poly.vanishes ? "vanishes" : "nonzero") << "\n";
    std::cout << "reciprocity:     " << rep.reciprocity.checked << " pairs, " << rep.reciprocity.failures
              << " failures\n"
              << "consistency:     " << (rep.consistent() ? "consistent with both theorems" : "INCONSISTENT")
              << "\n";
    for (const auto& n : rep.notes) std::cout << "note: " << n << "\n";
    return rep.consistent() ? kExitOk : kExitInconsistent;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("actcheck ") + ACT_VERSION +
                 " - exact verification of spectral properties of algebraic curvature tensors"};
    app.require_subcommand(1);
    app.fallthrough();  // global options (--seed) usable after a subcommand

    std::uint64_t seed = default_seed();
    app.add_option("--seed", seed, "global RNG seed (env ACTCHECK_SEED overrides the default)")
        ->capture_default_str();

    // validate
    std::string validate_path;
    CLI::App* validate = app.add_subcommand("validate", "check the curvature symmetries of a tensor file");
    validate->add_option("file", validate_path, "tensor JSON file")->required();

    // report
    std::string report_path, report_out;
    int report_samples = 64;
    double report_tol = 1e-9;
    std::string report_domain = "exact";
    CLI::App* report = app.add_subcommand("report", "run every property checker and write a report");
    report->add_option("file", report_path, "tensor JSON file")->required();
    report->add_option("--samples", report_samples, "samples per cone")->capture_default_str();
    report->add_option("--tol", report_tol, "relative tolerance for floating comparisons")
        ->capture_default_str();
    report->add_option("--domain", report_domain, "exact | float (float forces the numeric duality path)")
        ->check(CLI::IsMember({"exact", "float"}))
        ->capture_default_str();
    report->add_option("--out", report_out, "write the JSON report here")->capture_default_str();

    // scan
    int scan_p = 2, scan_q = 1, scan_dim = 0, scan_instances = 50, scan_threads = 2;
    std::string scan_target = "duality-violation", scan_family = "random", scan_out;
    CLI::App* scan = app.add_subcommand("scan", "search random tensors for witnesses");
    scan->add_option("--signature", [&scan_p, &scan_q](const std::vector<std::string>& vals) {
            if (vals.empty()) return false;
            return std::sscanf(vals.back().c_str(), "%d,%d", &scan_p, &scan_q) == 2;
        },
        "signature p,q (default 2,1)");
    scan->add_option("--dim", scan_dim, "dimension (must equal p+q when given; max 8)");
    scan->add_option("--instances", scan_instances, "number of tensors to generate")->capture_default_str();
    scan->add_option("--target", scan_target,
                     "osserman-violation | duality-violation | nongeneric-vector | nilpotent-jacobi")
        ->capture_default_str();
    scan->add_option("--family", scan_family, "random | constant-curvature | null-phi")
        ->capture_default_str();
    scan->add_option("--threads", scan_threads, "worker threads (output independent of the count)")
        ->capture_default_str();
    scan->add_option("--out", scan_out, "write the witness archive here")->capture_default_str();

    // theorems
    std::string theorems_level = "quick";
    CLI::App* theorems = app.add_subcommand("theorems", "run the acceptance property suite");
    theorems->add_option("--level", theorems_level, "quick | full")
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return run_validate(validate_path);

        if (report->parsed()) {
            act::LoadedTensor loaded;
            try {
                loaded = act::load_tensor_file(report_path);
            } catch (const act::symmetry_violation_error& e) {
                std::cout << "tensor fails the curvature symmetries (" << e.report.violations.size()
                          << " quadruples); run `actcheck validate` for the listing\n";
                return kExitViolation;
            } catch (const act::input_error& e) {
                std::cerr << "input error: " << e.what() << "\n";
                return kExitInput;
            }
            act::CheckParams params;
            params.samples = report_samples;
            params.seed = seed;
            params.tol = report_tol;
            params.force_floating = report_domain == "float";
            nlohmann::json desc = act::save_tensor_json(loaded);
            if (loaded.is_complex()) return report_for(loaded.complex_tensor(), params, desc, report_out);
            return report_for(loaded.real_tensor(), params, desc, report_out);
        }

        if (scan->parsed()) {
            if (scan_dim != 0 && scan_dim != scan_p + scan_q) {
                std::cerr << "input error: --dim must equal p+q\n";
                return kExitInput;
            }
            act::scan::ScanParams params;
            params.p = scan_p;
            params.q = scan_q;
            params.instances = scan_instances;
            params.seed = seed;
            params.threads = scan_threads;
            act::scan::ScanResult res = act::scan::run_scan(act::scan::parse_target(scan_target),
                                                            act::scan::parse_family(scan_family), params);
            if (!scan_out.empty()) {
                std::ofstream out(scan_out);
                if (!out) {
                    std::cerr << "cannot write archive: " << scan_out << "\n";
                    return kExitInput;
                }
                nlohmann::json archive;
                archive["target"] = scan_target;
                archive["family"] = scan_family;
                archive["seed"] = seed;
                archive["instances"] = res.instances;
                archive["hits"] = res.archive;
                out << archive.dump(2) << "\n";
            }
            std::cout << "scanned " << res.instances << " tensors in " << "(" << scan_p << "," << scan_q
                      << "), target " << scan_target << ": " << res.hits << " witnesses\n";
            return kExitOk;
        }

        if (theorems->parsed()) {
            act::acceptance::Level level = theorems_level == "full" ? act::acceptance::Level::full
                                                                    : act::acceptance::Level::quick;
            act::acceptance::SuiteResult suite = act::acceptance::run_suite(level, seed, std::cout);
            return suite.all_pass() ? kExitOk : kExitViolation;
        }
    } catch (const act::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const act::internal_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
