#ifndef ACT_SCAN_HPP
#define ACT_SCAN_HPP

#include <json.hpp>

#include <string>

#include "act/catalog.hpp"
#include "act/checks.hpp"
#include "act/parallel.hpp"
#include "act/tensor_io.hpp"

namespace act::scan {

enum class Target { osserman_violation, duality_violation, nongeneric_vector, nilpotent_jacobi };
enum class Family { random_tensors, constant_curvature, null_phi };

Target parse_target(const std::string& name);
Family parse_family(const std::string& name);
std::string to_string(Target t);
std::string to_string(Family f);

struct ScanParams {
    int p = 2, q = 1;
    int instances = 50;
    std::uint64_t seed = 1;
    int samples = 32;      // per-instance checker samples
    double tol = 1e-9;
    long bound = 5;
    int generators = 3;
    int threads = 1;
};

struct ScanResult {
    int instances = 0;
    int hits = 0;
    nlohmann::json archive;  // one entry per witness, with full reproduction parameters
};

// Generates `instances` tensors from the family, runs the target checker on
// each, re-verifies every witness, and archives the hits. Deterministic in
// the seed; instances are processed with derived seeds so thread count does
// not change the output.
ScanResult run_scan(Target target, Family family, const ScanParams& params);

} // namespace act::scan

#endif
