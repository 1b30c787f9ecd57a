#ifndef WEILFORM_LINALG_HPP
#define WEILFORM_LINALG_HPP

#include <vector>

#include "weilform/errors.hpp"
#include "weilform/poly.hpp"
#include "weilform/rational.hpp"

namespace weilform {

// Dense matrix over an exact field F (F = Rat or Cyc).  Value semantics
// throughout; all routines are plain Gaussian elimination, which is fine at
// desk scale.
template <class F>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, F(0)) {}
    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    F& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const F& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const F& x = (*this)(i, k);
                if (x == F(0)) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }
    Matrix operator*(const F& s) const {
        Matrix r = *this;
        for (auto& x : r.a_) x *= s;
        return r;
    }
    std::vector<F> apply(const std::vector<F>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw InputError("matrix apply shape mismatch");
        std::vector<F> r(rows_, F(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }
    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    bool is_zero() const {
        for (const auto& x : a_)
            if (!(x == F(0))) return false;
        return true;
    }

  private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch");
    }
    int rows_, cols_;
    std::vector<F> a_;
};

using Mat = Matrix<Rat>;

// In-place reduced row echelon form; returns pivot columns.
template <class F>
std::vector<int> rref(Matrix<F>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!(m(i, c) == F(0))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        F inv = F(1) / m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == F(0)) continue;
            F f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
int rank(Matrix<F> m) {
    return static_cast<int>(rref(m).size());
}

// Basis of {x : m x = 0}, one vector per non-pivot column.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m) {
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<F> v(m.cols(), F(0));
        v[c] = F(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
F det(Matrix<F> m) {
    if (m.rows() != m.cols()) throw InputError("determinant of non-square matrix");
    F d(1);
    int n = m.rows();
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!(m(i, c) == F(0))) {
                p = i;
                break;
            }
        if (p < 0) return F(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        F inv = F(1) / m(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c) == F(0)) continue;
            F f = m(i, c) * inv;
            for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw InputError("inverse of non-square matrix");
    int n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    std::vector<int> piv = rref(aug);
    if (static_cast<int>(piv.size()) != n || piv[n - 1] != n - 1)
        throw InputError("matrix not invertible");
    Matrix<F> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// det(T*I - F) by Hessenberg reduction, O(n^3) field operations.
Poly char_poly_monic(const Mat& m);

// Monic generator of the ideal {g : g(m) v = 0}.
Poly vector_annihilator(const Mat& m, const std::vector<Rat>& v);

// Minimal polynomial via Krylov spans.
Poly min_poly(const Mat& m);

// Row-reduced basis of a subspace of Q^n.  Rows are the basis; always in
// rref so equality of subspaces is equality of representations.
class Subspace {
  public:
    explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}
    static Subspace from_vectors(int ambient, const std::vector<std::vector<Rat>>& vecs);
    static Subspace full(int ambient);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    std::vector<Rat> basis_vector(int i) const;

    bool contains(const std::vector<Rat>& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

    Subspace sum(const Subspace& other) const;
    // image of this subspace under the linear map m (m acts on columns)
    Subspace image(const Mat& m) const;
    // {x : m x in this}
    Subspace preimage(const Mat& m) const;
    // representatives extending `inner` to a basis of this subspace; the
    // returned vectors together with a basis of `inner` span `this`
    std::vector<std::vector<Rat>> complement_in(const Subspace& inner) const;

  private:
    int ambient_;
    Mat basis_;
};

std::vector<std::vector<Rat>> image_basis(const Mat& m);

}  // namespace weilform

#endif
