#ifndef ACT_MATRIX_HPP
#define ACT_MATRIX_HPP

#include <string>
#include <utility>
#include <vector>

#include "act/errors.hpp"
#include "act/rational.hpp"
#include "act/space.hpp"

namespace act {

// Dense row-major matrix over an exact field K.
template <class K>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), K(0)) {
        if (rows < 0 || cols < 0) throw usage_error("negative matrix dimensions");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& at(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
    const K& at(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        x.check_same(y);
        Matrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        x.check_same(y);
        Matrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }
    friend Matrix operator*(const K& s, const Matrix& x) {
        Matrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = s * x.a_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw usage_error("matrix product shape mismatch");
        Matrix r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const K& xik = x.at(i, k);
                if (is_zero(xik)) continue;
                for (int j = 0; j < y.cols_; ++j) r.at(i, j) = r.at(i, j) + xik * y.at(k, j);
            }
        return r;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    Vec<K> apply(const Vec<K>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw usage_error("matrix-vector shape mismatch");
        Vec<K> r(static_cast<std::size_t>(rows_), K(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] = r[i] + at(i, j) * v[j];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    K trace() const {
        if (rows_ != cols_) throw usage_error("trace of non-square matrix");
        K t = K(0);
        for (int i = 0; i < rows_; ++i) t = t + at(i, i);
        return t;
    }

    bool is_zero_matrix() const {
        for (const K& v : a_)
            if (!is_zero(v)) return false;
        return true;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < rows_; ++i) {
            s += i ? "; " : "";
            for (int j = 0; j < cols_; ++j) s += (j ? "," : "") + act::to_string(at(i, j));
        }
        return s + "]";
    }

  private:
    void check_same(const Matrix& y) const {
        if (rows_ != y.rows_ || cols_ != y.cols_) throw usage_error("matrix shape mismatch");
    }
    int rows_ = 0, cols_ = 0;
    std::vector<K> a_;
};

// Row echelon rank over the exact field. Pivots chosen by pivot_size to keep
// intermediate values small.
template <class K>
int rank(Matrix<K> m) {
    int r = 0;
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
        int best = -1;
        Rational best_size;
        for (int i = r; i < m.rows(); ++i) {
            if (is_zero(m.at(i, col))) continue;
            Rational sz = pivot_size(m.at(i, col));
            if (best < 0 || sz > best_size) {
                best = i;
                best_size = sz;
            }
        }
        if (best < 0) continue;
        if (best != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(best, j));
        K inv = K(1) / m.at(r, col);
        for (int i = r + 1; i < m.rows(); ++i) {
            if (is_zero(m.at(i, col))) continue;
            K f = m.at(i, col) * inv;
            for (int j = col; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

// Basis of the right nullspace (exact reduced row echelon form).
template <class K>
std::vector<Vec<K>> nullspace_basis(Matrix<K> m) {
    int n = m.cols();
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < n && r < m.rows(); ++col) {
        int best = -1;
        Rational best_size;
        for (int i = r; i < m.rows(); ++i) {
            if (is_zero(m.at(i, col))) continue;
            Rational sz = pivot_size(m.at(i, col));
            if (best < 0 || sz > best_size) {
                best = i;
                best_size = sz;
            }
        }
        if (best < 0) continue;
        if (best != r)
            for (int j = 0; j < n; ++j) std::swap(m.at(r, j), m.at(best, j));
        K inv = K(1) / m.at(r, col);
        for (int j = 0; j < n; ++j) m.at(r, j) = m.at(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m.at(i, col))) continue;
            K f = m.at(i, col);
            for (int j = 0; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<Vec<K>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        Vec<K> v(static_cast<std::size_t>(n), K(0));
        v[static_cast<std::size_t>(free)] = K(1);
        for (int row = 0; row < static_cast<int>(pivot_col.size()); ++row)
            v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(row)])] = K(0) - m.at(row, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// A square operator acting on coordinate vectors of a pseudo-Euclidean space.
template <class K>
struct Operator {
    Space space;
    Matrix<K> mat;

    Operator() = default;
    Operator(Space s, Matrix<K> m) : space(std::move(s)), mat(std::move(m)) {
        if (mat.rows() != space.n || mat.cols() != space.n)
            throw usage_error("operator matrix must be n x n for the space");
    }
};

// <A y, z> = <y, A z> for all y,z iff G*A is symmetric, G = diag(eps).
template <class K>
bool is_metric_self_adjoint(const Operator<K>& a) {
    const int n = a.space.n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            K lhs = a.space.eps[i] < 0 ? K(K(0) - a.mat.at(i, j)) : a.mat.at(i, j);
            K rhs = a.space.eps[j] < 0 ? K(K(0) - a.mat.at(j, i)) : a.mat.at(j, i);
            if (lhs != rhs) return false;
        }
    return true;
}

} // namespace act

#endif
