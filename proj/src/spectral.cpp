#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "act/spectral.hpp"

namespace act {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexDense& m) {
    Eigen::MatrixXcd a(m.n, m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) a(i, j) = m.at(i, j);
    return a;
}

// Transitive clustering of eigenvalues within `threshold`.
std::vector<std::vector<int>> cluster_indices(const Eigen::VectorXcd& values, double threshold) {
    const int n = static_cast<int>(values.size());
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(values(i) - values(j)) <= threshold) parent[static_cast<std::size_t>(find(i))] = find(j);
    std::vector<std::vector<int>> groups;
    std::vector<int> group_of(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int root = find(i);
        if (group_of[static_cast<std::size_t>(root)] < 0) {
            group_of[static_cast<std::size_t>(root)] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<std::size_t>(group_of[static_cast<std::size_t>(root)])].push_back(i);
    }
    std::sort(groups.begin(), groups.end(), [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::complex<double> va = values(a[0]), vb = values(b[0]);
        if (va.real() != vb.real()) return va.real() < vb.real();
        return va.imag() < vb.imag();
    });
    return groups;
}

int svd_rank(const Eigen::MatrixXcd& m, double threshold, bool& marginal) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    int r = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
        double s = svd.singularValues()(i);
        if (s > threshold) ++r;
        if (threshold > 0 && s > threshold / 10 && s < threshold * 10) marginal = true;
    }
    return r;
}

// Orthonormal basis of the numerical nullspace of m at the given threshold.
std::vector<std::vector<std::complex<double>>> svd_nullspace(const Eigen::MatrixXcd& m, double threshold) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
    const int n = static_cast<int>(m.cols());
    int r = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > threshold) ++r;
    std::vector<std::vector<std::complex<double>>> basis;
    for (int c = r; c < n; ++c) {
        std::vector<std::complex<double>> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = svd.matrixV()(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

double max_row_sum_norm(const ComplexDense& m) {
    double best = 0.0;
    for (int i = 0; i < m.n; ++i) {
        double row = 0.0;
        for (int j = 0; j < m.n; ++j) row += std::abs(m.at(i, j));
        best = std::max(best, row);
    }
    return best;
}

EigenDecomposition eigen_decomposition(const ComplexDense& m, double tol) {
    if (tol < 0) throw usage_error("eigen_decomposition: negative tolerance");
    Eigen::MatrixXcd a = to_eigen(m);
    const int n = m.n;
    EigenDecomposition res;
    res.op_norm = max_row_sum_norm(m);

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) throw internal_error("eigen_decomposition: solver failed");
    std::vector<std::vector<int>> groups = cluster_indices(es.eigenvalues(), tol * res.op_norm);

    for (const auto& grp : groups) {
        EigenCluster cl;
        std::complex<double> mean = 0.0;
        for (int idx : grp) mean += es.eigenvalues()(idx);
        mean /= static_cast<double>(grp.size());
        cl.eigenvalue = mean;
        cl.algebraic_multiplicity = static_cast<int>(grp.size());

        Eigen::MatrixXcd shifted = a - mean * Eigen::MatrixXcd::Identity(n, n);
        cl.eigenvectors = svd_nullspace(shifted, tol * std::max(res.op_norm, 1e-300));
        for (const auto& v : cl.eigenvectors) {
            Eigen::VectorXcd ev(n);
            for (int i = 0; i < n; ++i) ev(i) = v[static_cast<std::size_t>(i)];
            double resid = (a * ev - mean * ev).norm();
            double denom = res.op_norm > 0 ? res.op_norm * ev.norm() : ev.norm();
            cl.max_residual = std::max(cl.max_residual, denom > 0 ? resid / denom : resid);
        }
        res.clusters.push_back(std::move(cl));
    }
    return res;
}

namespace {

// One clustering attempt: rank-based block sizes per cluster, with every
// internal consistency condition tracked in `unreliable`.
JordanStructure jordan_attempt(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& values, int n,
                               double opn, double tol, double cluster_radius) {
    std::vector<std::vector<int>> groups = cluster_indices(values, cluster_radius);
    JordanStructure js;
    for (const auto& grp : groups) {
        std::complex<double> mean = 0.0;
        for (int idx : grp) mean += values(idx);
        mean /= static_cast<double>(grp.size());
        const int alg_mult = static_cast<int>(grp.size());

        Eigen::MatrixXcd shifted = a - mean * Eigen::MatrixXcd::Identity(n, n);
        // ranks r_k = rank((A - lambda I)^k), thresholded at tol * ||A||^k
        std::vector<int> ranks{n};
        Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(n, n);
        for (int k = 1; k <= n; ++k) {
            power = power * shifted;
            double threshold = tol * std::pow(std::max(opn, 1e-300), k);
            bool marginal = false;
            int r = svd_rank(power, threshold, marginal);
            if (marginal) js.unreliable = true;
            ranks.push_back(r);
            if (r == ranks[static_cast<std::size_t>(k - 1)]) break;  // nilpotent part exhausted
        }
        // number of blocks of size >= k is r_{k-1} - r_k
        std::vector<int> at_least;
        for (std::size_t k = 1; k < ranks.size(); ++k) {
            int b = ranks[k - 1] - ranks[k];
            if (b < 0) {
                js.unreliable = true;
                b = 0;
            }
            if (!at_least.empty() && b > at_least.back()) {
                js.unreliable = true;
                b = at_least.back();
            }
            at_least.push_back(b);
        }
        JordanStructure::Entry entry;
        entry.factor_id = -1;
        entry.eigenvalue = mean;
        int total = 0;
        for (std::size_t k = 0; k < at_least.size(); ++k) {
            int next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
            for (int c = 0; c < at_least[k] - next; ++c) entry.blocks.push_back(static_cast<int>(k + 1));
        }
        std::sort(entry.blocks.begin(), entry.blocks.end(), std::greater<int>());
        for (int b : entry.blocks) total += b;
        if (total != alg_mult) js.unreliable = true;
        js.entries.push_back(std::move(entry));
    }
    return js;
}

} // namespace

JordanStructure jordan_structure_numeric(const ComplexDense& m, double tol) {
    if (tol < 0) throw usage_error("jordan_structure_numeric: negative tolerance");
    Eigen::MatrixXcd a = to_eigen(m);
    const int n = m.n;
    double opn = max_row_sum_norm(m);

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a, false);
    if (es.info() != Eigen::Success) throw internal_error("jordan_structure_numeric: solver failed");

    // A size-k Jordan block scatters its computed eigenvalue into a cloud of
    // radius about ||A|| eps^(1/k), far wider than the baseline merge radius.
    // Escalate the cluster radius through those scales until the rank-based
    // structure validates; a merge of genuinely distinct eigenvalues cannot
    // validate (its block sizes cannot add up to the algebraic multiplicity),
    // so escalation never over-merges silently.
    constexpr double eps = 2.2e-16;
    std::vector<double> radii{tol * opn};
    for (int k = 2; k <= n; ++k) radii.push_back(4.0 * std::max(opn, 1.0) * std::pow(eps, 1.0 / k));
    JordanStructure first;
    bool have_first = false;
    for (double radius : radii) {
        JordanStructure js = jordan_attempt(a, es.eigenvalues(), n, opn, tol, radius);
        if (!have_first) {
            first = js;
            have_first = true;
        }
        if (!js.unreliable) return js;
    }
    first.unreliable = true;
    return first;
}

} // namespace act
