#ifndef ACT_TENSOR_IO_HPP
#define ACT_TENSOR_IO_HPP

#include <json.hpp>

#include <string>
#include <variant>

#include "act/curvature.hpp"
#include "act/rational.hpp"

namespace act {

// Component convention embedded in tensor files and checked on load.
inline constexpr const char* kComponentConvention = "R_{ijkl} = <R(e_i,e_j)e_k, e_l>";

// Explicit components parsed and shaped correctly but violating the
// curvature symmetries; carries the full violation report (a finding for
// cmd_validate, distinct from malformed input).
struct symmetry_violation_error : std::runtime_error {
    SymmetryReport report;
    explicit symmetry_violation_error(SymmetryReport rep)
        : std::runtime_error("curvature components violate the required symmetries"),
          report(std::move(rep)) {}
};

struct LoadedTensor {
    // monostate only before assignment; loaders always fill the tensor
    std::variant<std::monostate, CurvatureTensor<Rational>, CurvatureTensor<GaussianRational>> tensor;
    nlohmann::json spec;  // normalized description; serializing it round-trips exactly

    bool is_complex() const { return std::holds_alternative<CurvatureTensor<GaussianRational>>(tensor); }
    const CurvatureTensor<Rational>& real_tensor() const { return std::get<CurvatureTensor<Rational>>(tensor); }
    const CurvatureTensor<GaussianRational>& complex_tensor() const {
        return std::get<CurvatureTensor<GaussianRational>>(tensor);
    }
    const Space& space() const {
        if (is_complex()) return complex_tensor().space();
        return real_tensor().space();
    }
};

// Accepts {"dimension", "field", "signature"|"metric_diag"|"metric",
// "convention"?, "components"|"constructor"}. Arbitrary symmetric rational
// metrics are diagonalised exactly by congruence; the ±1 normalization needs
// every diagonal entry to be ± a rational square, and anything else is
// rejected with instructions (exact arithmetic cannot scale by irrational
// square roots).
LoadedTensor load_tensor_json(const nlohmann::json& j);
LoadedTensor load_tensor_file(const std::string& path);

template <class K>
nlohmann::json tensor_components_json(const CurvatureTensor<K>& t);

nlohmann::json save_tensor_json(const LoadedTensor& t);
void save_tensor_file(const LoadedTensor& t, const std::string& path);

// Normalized spec for a catalog-constructed tensor (used by the scanner's
// witness archives).
nlohmann::json constructor_spec_json(int p, int q, const std::string& field, const std::string& name,
                                     const nlohmann::json& parameters);

} // namespace act

#endif
