#include "act/checks.hpp"

#include <cmath>

namespace act {

ContinuedPair eigen_continuation_numeric(const NumericTensor& t, const CVec& y,
                                         std::complex<double> mu, const CVec& e, double tol) {
    ComplexDense a = jacobi_numeric(t, y);
    EigenDecomposition ed = eigen_decomposition(a, tol);
    if (ed.clusters.empty()) throw internal_error("eigen_continuation: empty spectrum");

    std::vector<std::pair<double, int>> by_distance;
    for (std::size_t c = 0; c < ed.clusters.size(); ++c)
        by_distance.emplace_back(std::abs(ed.clusters[c].eigenvalue - mu), static_cast<int>(c));
    std::sort(by_distance.begin(), by_distance.end());

    double gap_scale = std::max(1.0, ed.op_norm);
    std::vector<int> candidates{by_distance[0].second};
    for (std::size_t i = 1; i < by_distance.size(); ++i)
        if (by_distance[i].first - by_distance[0].first <= 1e-12 * gap_scale)
            candidates.push_back(by_distance[i].second);

    // Project the reference eigenvector onto each candidate eigenspace
    // (orthonormal bases, Hermitian projection); the branch is the one
    // carrying the largest projection.
    auto project = [&](const EigenCluster& cl) {
        CVec proj(y.size(), 0.0);
        for (const CVec& v : cl.eigenvectors) {
            std::complex<double> coeff = 0.0;
            for (std::size_t i = 0; i < v.size(); ++i) coeff += std::conj(v[i]) * e[i];
            for (std::size_t i = 0; i < v.size(); ++i) proj[i] += coeff * v[i];
        }
        return proj;
    };

    int best = candidates[0];
    CVec best_proj = project(ed.clusters[static_cast<std::size_t>(best)]);
    if (candidates.size() > 1) {
        double best_norm = euclidean_norm(best_proj);
        double second_norm = -1.0;
        for (std::size_t i = 1; i < candidates.size(); ++i) {
            CVec proj = project(ed.clusters[static_cast<std::size_t>(candidates[i])]);
            double pn = euclidean_norm(proj);
            if (pn > best_norm) {
                second_norm = best_norm;
                best_norm = pn;
                best = candidates[i];
                best_proj = std::move(proj);
            } else {
                second_norm = std::max(second_norm, pn);
            }
        }
        if (second_norm >= 0 && best_norm > 0 && (best_norm - second_norm) <= 1e-6 * best_norm)
            throw continuation_error(
                "eigen_continuation: two eigenvalue branches are equally near; reduce the step or radius");
    }

    const EigenCluster& cl = ed.clusters[static_cast<std::size_t>(best)];
    double pn = euclidean_norm(best_proj);
    if (pn <= 1e-8 * euclidean_norm(e))
        throw continuation_error("eigen_continuation: reference eigenvector projects to zero; reduce the step");
    ContinuedPair res;
    res.eigenvalue = cl.eigenvalue;
    res.eigenvector = std::move(best_proj);
    CVec av = mat_apply(a, res.eigenvector);
    CVec defect = cvec_axpy(av, -res.eigenvalue, res.eigenvector);
    double denom = (ed.op_norm > 0 ? ed.op_norm : 1.0) * pn;
    res.residual = euclidean_norm(defect) / denom;
    return res;
}

} // namespace act
