#include <cmath>

#include "act/curvature.hpp"

namespace act {

SymmetryReport validate_dense_floating(const Space& s, const std::vector<double>& dense,
                                       const ScalarDomain& domain) {
    const int n = s.n;
    if (dense.size() != static_cast<std::size_t>(n) * n * n * n)
        throw usage_error("dense component array has wrong size");
    double scale = 0.0;
    for (double v : dense) scale = std::max(scale, std::abs(v));
    auto R = [&](int i, int j, int k, int l) { return dense[dense_index(n, i, j, k, l)]; };
    SymmetryReport rep;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    double anti = R(i, j, k, l) + R(j, i, k, l);
                    if (!domain.is_zero(anti, scale))
                        rep.violations.push_back(
                            {SymmetryViolation::Family::antisymmetry, i, j, k, l, std::to_string(anti)});
                    double pair = R(i, j, k, l) - R(k, l, i, j);
                    if (!domain.is_zero(pair, scale))
                        rep.violations.push_back(
                            {SymmetryViolation::Family::pair_symmetry, i, j, k, l, std::to_string(pair)});
                    double bianchi = R(i, j, k, l) + R(j, k, i, l) + R(k, i, j, l);
                    if (!domain.is_zero(bianchi, scale))
                        rep.violations.push_back(
                            {SymmetryViolation::Family::bianchi, i, j, k, l, std::to_string(bianchi)});
                }
    return rep;
}

} // namespace act
