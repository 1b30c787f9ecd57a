#include "weilform/linalg.hpp"

namespace weilform {

Poly char_poly_monic(const Mat& m) {
    if (m.rows() != m.cols()) throw InputError("char poly of non-square matrix");
    int n = m.rows();
    if (n == 0) return Poly(Rat(1));
    Mat h = m;
    // similarity reduction to upper Hessenberg form
    for (int c = 0; c + 2 < n; ++c) {
        int p = -1;
        for (int i = c + 1; i < n; ++i)
            if (h(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != c + 1) {
            for (int j = 0; j < n; ++j) std::swap(h(p, j), h(c + 1, j));
            for (int i = 0; i < n; ++i) std::swap(h(i, p), h(i, c + 1));
        }
        Rat inv = 1 / h(c + 1, c);
        for (int i = c + 2; i < n; ++i) {
            if (h(i, c) == 0) continue;
            Rat f = h(i, c) * inv;
            for (int j = c; j < n; ++j) h(i, j) -= f * h(c + 1, j);
            for (int r = 0; r < n; ++r) h(r, c + 1) += f * h(r, i);
        }
    }
    // p_k = char poly of the leading k x k block, expanded along column k
    std::vector<Poly> p(n + 1);
    p[0] = Poly(Rat(1));
    for (int k = 1; k <= n; ++k) {
        Poly t = Poly(std::vector<Rat>{-h(k - 1, k - 1), Rat(1)});
        p[k] = t * p[k - 1];
        Rat prod(1);
        for (int i = k - 2; i >= 0; --i) {
            prod *= h(i + 1, i);
            p[k] = p[k] - p[i] * (h(i, k - 1) * prod);
        }
    }
    return p[n];
}

Poly vector_annihilator(const Mat& m, const std::vector<Rat>& v) {
    int n = m.rows();
    if (n == 0) return Poly(Rat(1));
    // Krylov chain v, mv, m^2 v, ...; rows kept reduced, each carrying the
    // coefficients expressing it in terms of the chain.
    std::vector<std::vector<Rat>> rows;    // reduced vectors
    std::vector<std::vector<Rat>> coeffs;  // expression in chain vectors
    std::vector<int> leads;
    std::vector<Rat> cur = v;
    for (int k = 0; k <= n; ++k) {
        std::vector<Rat> w = cur;
        std::vector<Rat> expr(static_cast<size_t>(k) + 1, Rat(0));
        expr[k] = 1;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (w[leads[r]] == 0) continue;
            Rat f = w[leads[r]];
            for (int j = 0; j < n; ++j) w[j] -= f * rows[r][j];
            for (size_t j = 0; j < coeffs[r].size(); ++j) expr[j] -= f * coeffs[r][j];
        }
        int lead = -1;
        for (int j = 0; j < n; ++j)
            if (w[j] != 0) {
                lead = j;
                break;
            }
        if (lead < 0) {
            // dependence found: expr gives the annihilator coefficients
            return Poly(std::move(expr)).monic();
        }
        Rat inv = 1 / w[lead];
        for (int j = 0; j < n; ++j) w[j] *= inv;
        for (auto& x : expr) x *= inv;
        rows.push_back(std::move(w));
        coeffs.push_back(std::move(expr));
        leads.push_back(lead);
        cur = m.apply(cur);
    }
    throw InternalInvariantError("vector_annihilator: no dependence found");
}

Poly min_poly(const Mat& m) {
    if (m.rows() != m.cols()) throw InputError("min poly of non-square matrix");
    int n = m.rows();
    Poly acc(Rat(1));
    for (int s = 0; s < n && acc.degree() < n; ++s) {
        std::vector<Rat> v(n, Rat(0));
        v[s] = 1;
        acc = poly_lcm(acc, vector_annihilator(m, v)).monic();
    }
    return acc;
}

Subspace Subspace::from_vectors(int ambient, const std::vector<std::vector<Rat>>& vecs) {
    Mat m(static_cast<int>(vecs.size()), ambient);
    for (size_t i = 0; i < vecs.size(); ++i) {
        if (static_cast<int>(vecs[i].size()) != ambient) throw InputError("subspace vector length mismatch");
        for (int j = 0; j < ambient; ++j) m(static_cast<int>(i), j) = vecs[i][j];
    }
    std::vector<int> piv = rref(m);
    Subspace s(ambient);
    Mat b(static_cast<int>(piv.size()), ambient);
    for (size_t i = 0; i < piv.size(); ++i)
        for (int j = 0; j < ambient; ++j) b(static_cast<int>(i), j) = m(static_cast<int>(i), j);
    s.basis_ = b;
    return s;
}

Subspace Subspace::full(int ambient) {
    Subspace s(ambient);
    s.basis_ = Mat::identity(ambient);
    return s;
}

std::vector<Rat> Subspace::basis_vector(int i) const {
    std::vector<Rat> v(ambient_);
    for (int j = 0; j < ambient_; ++j) v[j] = basis_(i, j);
    return v;
}

bool Subspace::contains(const std::vector<Rat>& v) const {
    // reduce v against the rref basis
    std::vector<Rat> w = v;
    for (int r = 0; r < basis_.rows(); ++r) {
        int lead = -1;
        for (int j = 0; j < ambient_; ++j)
            if (basis_(r, j) != 0) {
                lead = j;
                break;
            }
        if (lead < 0) continue;
        if (w[lead] != 0) {
            Rat f = w[lead];
            for (int j = 0; j < ambient_; ++j) w[j] -= f * basis_(r, j);
        }
    }
    for (const auto& x : w)
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw InputError("subspace sum ambient mismatch");
    std::vector<std::vector<Rat>> vecs;
    for (int i = 0; i < dim(); ++i) vecs.push_back(basis_vector(i));
    for (int i = 0; i < other.dim(); ++i) vecs.push_back(other.basis_vector(i));
    return from_vectors(ambient_, vecs);
}

Subspace Subspace::image(const Mat& m) const {
    std::vector<std::vector<Rat>> vecs;
    for (int i = 0; i < dim(); ++i) vecs.push_back(m.apply(basis_vector(i)));
    return from_vectors(m.rows(), vecs);
}

Subspace Subspace::preimage(const Mat& m) const {
    // {x : m x in span(basis)}: solve [m | -basis^T] (x, y) = 0, keep x part
    int n = m.cols();
    int k = dim();
    Mat sys(m.rows(), n + k);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < n; ++j) sys(i, j) = m(i, j);
        for (int j = 0; j < k; ++j) sys(i, n + j) = -basis_(j, i);
    }
    std::vector<std::vector<Rat>> ker = nullspace(sys);
    std::vector<std::vector<Rat>> xs;
    for (auto& v : ker) xs.emplace_back(v.begin(), v.begin() + n);
    return from_vectors(n, xs);
}

std::vector<std::vector<Rat>> Subspace::complement_in(const Subspace& inner) const {
    if (!contains(inner)) throw InputError("complement_in: not a subspace");
    std::vector<std::vector<Rat>> reps;
    Subspace cur = inner;
    for (int i = 0; i < dim(); ++i) {
        std::vector<Rat> v = basis_vector(i);
        if (!cur.contains(v)) {
            reps.push_back(v);
            cur = cur.sum(from_vectors(ambient_, {v}));
        }
    }
    return reps;
}

std::vector<std::vector<Rat>> image_basis(const Mat& m) {
    std::vector<std::vector<Rat>> cols;
    for (int j = 0; j < m.cols(); ++j) {
        std::vector<Rat> v(m.rows());
        for (int i = 0; i < m.rows(); ++i) v[i] = m(i, j);
        cols.push_back(std::move(v));
    }
    Subspace s = Subspace::from_vectors(m.rows(), cols);
    std::vector<std::vector<Rat>> basis;
    for (int i = 0; i < s.dim(); ++i) basis.push_back(s.basis_vector(i));
    return basis;
}

}  // namespace weilform
