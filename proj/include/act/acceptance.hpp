#ifndef ACT_ACCEPTANCE_HPP
#define ACT_ACCEPTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace act::acceptance {

enum class Level { quick, full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::vector<std::string> details;
};

struct SuiteResult {
    std::vector<CriterionResult> criteria;
    double seconds = 0.0;

    bool all_pass() const {
        for (const auto& c : criteria)
            if (!c.pass) return false;
        return true;
    }
};

// Runs the acceptance property suites end to end, printing one pass/fail
// line per criterion (with measured values) to `out`. `quick` shrinks sample
// counts for a smoke run; `full` uses the pinned counts and tolerances.
SuiteResult run_suite(Level level, std::uint64_t seed, std::ostream& out);

} // namespace act::acceptance

#endif
