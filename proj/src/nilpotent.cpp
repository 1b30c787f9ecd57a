#include "weilform/nilpotent.hpp"

namespace weilform {

namespace {

int nilpotency_of(const Mat& n) {
    int dim = n.rows();
    if (dim == 0) return -1;
    Mat p = Mat::identity(dim);
    for (int k = 0; k <= dim; ++k) {
        Mat next = p * n;
        if (next.is_zero()) return k == 0 && n.is_zero() ? 0 : k;
        p = next;
    }
    return -2;
}

}  // namespace

NilpotentDatum::NilpotentDatum(Mat n) : n_(std::move(n)) {
    if (n_.rows() != n_.cols()) throw InputError("NilpotentDatum: matrix must be square");
    d_ = nilpotency_of(n_);
    if (d_ == -2) throw InputError("NilpotentDatum: matrix is not nilpotent");
    if (d_ == -1) d_ = 0;
}

NilpotentDatum::NilpotentDatum(Mat n, Mat pairing, int sign) : NilpotentDatum(std::move(n)) {
    if (sign != 1 && sign != -1) throw InputError("NilpotentDatum: sign must be +-1");
    if (pairing.rows() != n_.rows() || pairing.cols() != n_.cols())
        throw InputError("NilpotentDatum: pairing shape mismatch");
    if (!(pairing.transpose() - pairing * Rat(sign)).is_zero())
        throw InputError("NilpotentDatum: pairing does not have the declared symmetry");
    if (!(pairing * n_ + n_.transpose() * pairing).is_zero())
        throw InputError("NilpotentDatum: pairing is not N-compatible (A N = -N^T A fails)");
    if (n_.rows() > 0 && det(pairing) == 0) throw InputError("NilpotentDatum: pairing is degenerate");
    pairing_ = std::move(pairing);
    sign_ = sign;
}

const Mat& NilpotentDatum::pairing() const {
    if (!pairing_) throw InputError("NilpotentDatum: no pairing present");
    return *pairing_;
}

const Subspace& MonodromyFiltration::step(int j) const {
    if (j < -d - 1) j = -d - 1;
    if (j > d) j = d;
    return m.at(j);
}

namespace {

// recursion of the filtration: on V with N^{d+1} = 0, N^d != 0:
// M_d = V, M_{-d-1} = 0, M_{d-1} = ker N^d, M_{-d} = im N^d, then recurse on
// ker N^d / im N^d with the induced operator.
std::map<int, Subspace> filtration_rec(const Mat& n, int dim) {
    std::map<int, Subspace> m;
    if (dim == 0) {
        m.insert_or_assign(0, Subspace(0));
        m.insert_or_assign(-1, Subspace(0));
        return m;
    }
    int d = nilpotency_of(n);
    if (d <= 0) {
        m.insert_or_assign(0, Subspace::full(dim));
        m.insert_or_assign(-1, Subspace(dim));
        return m;
    }
    Mat nd = Mat::identity(dim);
    for (int k = 0; k < d; ++k) nd = nd * n;
    Subspace ker = Subspace::from_vectors(dim, nullspace(nd));
    Subspace img = Subspace::from_vectors(dim, image_basis(nd));
    // quotient ker/img: representatives and the induced nilpotent
    std::vector<std::vector<Rat>> reps = ker.complement_in(img);
    int qdim = static_cast<int>(reps.size());
    // coordinates: solve n*rep in terms of (reps | img basis)
    Mat solve_cols(dim, qdim + img.dim());
    for (int j = 0; j < qdim; ++j)
        for (int i = 0; i < dim; ++i) solve_cols(i, j) = reps[static_cast<size_t>(j)][i];
    for (int j = 0; j < img.dim(); ++j) {
        auto b = img.basis_vector(j);
        for (int i = 0; i < dim; ++i) solve_cols(i, qdim + j) = b[i];
    }
    Mat nq(qdim, qdim);
    for (int j = 0; j < qdim; ++j) {
        std::vector<Rat> target = n.apply(reps[static_cast<size_t>(j)]);
        // solve solve_cols * x = target
        Mat aug(dim, qdim + img.dim() + 1);
        for (int i = 0; i < dim; ++i) {
            for (int c = 0; c < qdim + img.dim(); ++c) aug(i, c) = solve_cols(i, c);
            aug(i, qdim + img.dim()) = target[i];
        }
        std::vector<int> piv = rref(aug);
        std::vector<Rat> x(static_cast<size_t>(qdim) + static_cast<size_t>(img.dim()), Rat(0));
        for (size_t r = 0; r < piv.size(); ++r) {
            if (piv[r] == qdim + img.dim())
                throw InternalInvariantError("quotient action: inconsistent solve");
            x[static_cast<size_t>(piv[r])] = aug(static_cast<int>(r), qdim + img.dim());
        }
        for (int i = 0; i < qdim; ++i) nq(i, j) = x[static_cast<size_t>(i)];
    }
    std::map<int, Subspace> mq = filtration_rec(nq, qdim);
    int dq = qdim == 0 ? 0 : std::max(0, nilpotency_of(nq));
    auto mq_at = [&](int j) -> const Subspace& {
        if (j < -dq - 1) j = -dq - 1;
        if (j > dq) j = dq;
        return mq.at(j);
    };
    m.insert_or_assign(d, Subspace::full(dim));
    m.insert_or_assign(-d - 1, Subspace(dim));
    for (int j = -d; j <= d - 1; ++j) {
        // lift: img + span of reps weighted by the quotient basis
        std::vector<std::vector<Rat>> vecs;
        for (int i = 0; i < img.dim(); ++i) vecs.push_back(img.basis_vector(i));
        const Subspace& qs = mq_at(j);
        for (int r = 0; r < qs.dim(); ++r) {
            std::vector<Rat> lifted(static_cast<size_t>(dim), Rat(0));
            for (int c = 0; c < qdim; ++c) {
                const Rat& coef = qs.basis()(r, c);
                if (coef == 0) continue;
                for (int i = 0; i < dim; ++i) lifted[static_cast<size_t>(i)] += coef * reps[static_cast<size_t>(c)][i];
            }
            vecs.push_back(std::move(lifted));
        }
        m.insert_or_assign(j, Subspace::from_vectors(dim, vecs));
    }
    return m;
}

Mat power_of(const Mat& n, int k) {
    Mat p = Mat::identity(n.rows());
    for (int i = 0; i < k; ++i) p = p * n;
    return p;
}

}  // namespace

MonodromyFiltration monodromy_filtration(const NilpotentDatum& datum) {
    const Mat& n = datum.n();
    int dim = datum.dimension();
    MonodromyFiltration out;
    out.d = std::max(0, datum.nilpotency_degree());
    out.m = filtration_rec(n, dim);
    // verification: N M_j <= M_{j-2} and N^k : gr_k ~ gr_{-k}
    auto at = [&](int j) -> const Subspace& {
        if (j < -out.d - 1) j = -out.d - 1;
        if (j > out.d) j = out.d;
        return out.m.at(j);
    };
    for (int j = -out.d; j <= out.d; ++j) {
        Subspace img = at(j).image(n);
        if (!at(j - 2).contains(img))
            throw InternalInvariantError("monodromy filtration: N M_j not inside M_{j-2}");
        out.graded_dim[j] = at(j).dim() - at(j - 1).dim();
    }
    for (int k = 1; k <= out.d; ++k) {
        // rank of N^k restricted: dim (N^k M_k + M_{-k-1}) - dim M_{-k-1}
        Mat nk = power_of(n, k);
        Subspace img = at(k).image(nk).sum(at(-k - 1));
        int induced_rank = img.dim() - at(-k - 1).dim();
        if (induced_rank != out.graded_dim[k] || out.graded_dim[k] != out.graded_dim[-k])
            throw InternalInvariantError("monodromy filtration: N^k is not an isomorphism gr_k -> gr_{-k}");
    }
    // primitive dimensions: P_i = ker(N : gr_i -> gr_{i-2}), computed as
    // {v in M_i : N v in M_{i-3}} modulo M_{i-1}
    for (int i = -out.d; i <= 0; ++i) {
        const Subspace& mi = at(i);
        Mat basis_t(dim, mi.dim());
        for (int r = 0; r < mi.dim(); ++r)
            for (int c = 0; c < dim; ++c) basis_t(c, r) = mi.basis()(r, c);
        Mat nb = n * basis_t;
        Subspace coeffs = at(i - 3).preimage(nb);
        out.primitive_dim[i] = coeffs.dim() - at(i - 1).dim();
    }
    return out;
}

std::map<int, std::vector<std::vector<Rat>>> primitive_parts(const NilpotentDatum& datum) {
    const Mat& n = datum.n();
    int dim = datum.dimension();
    MonodromyFiltration f = monodromy_filtration(datum);
    auto at = [&](int j) -> const Subspace& { return f.step(j); };
    std::map<int, std::vector<std::vector<Rat>>> out;
    for (int i = -f.d; i <= 0; ++i) {
        // {v in M_i : N v in M_{i-3}} as an explicit subspace
        Mat basis_t(dim, at(i).dim());
        for (int r = 0; r < at(i).dim(); ++r)
            for (int c = 0; c < dim; ++c) basis_t(c, r) = at(i).basis()(r, c);
        Mat nb = n * basis_t;
        Subspace coeffs = at(i - 3).preimage(nb);
        std::vector<std::vector<Rat>> vecs;
        for (int r = 0; r < coeffs.dim(); ++r) {
            std::vector<Rat> y = coeffs.basis_vector(r);
            std::vector<Rat> v(static_cast<size_t>(dim), Rat(0));
            for (int c = 0; c < at(i).dim(); ++c)
                for (int row = 0; row < dim; ++row) v[static_cast<size_t>(row)] += y[static_cast<size_t>(c)] * basis_t(row, c);
            vecs.push_back(std::move(v));
        }
        Subspace pre = Subspace::from_vectors(dim, vecs);
        std::vector<std::vector<Rat>> reps = pre.complement_in(at(i - 1));
        if (static_cast<int>(reps.size()) != f.primitive_dim[i])
            throw InternalInvariantError("primitive part dimension mismatch");
        if (!reps.empty()) out[i] = reps;
    }
    return out;
}

namespace {

// single superdiagonal nilpotent block of size n
Mat nilpotent_block(int n) {
    Mat m(n, n);
    for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
    return m;
}

// antidiagonal block A_n with (A_n)_{ij} = (-1)^i for i + j = n + 1 (1-based)
Mat antidiagonal_block(int n) {
    Mat a(n, n);
    for (int i = 1; i <= n; ++i) {
        int j = n + 1 - i;
        a(i - 1, j - 1) = (i % 2 == 0) ? 1 : -1;
    }
    return a;
}

}  // namespace

LaWitness la_witness(const std::vector<int>& multiplicities, int sign) {
    if (sign != 1 && sign != -1) throw InputError("la_witness: sign must be +-1");
    long total = 0;
    for (size_t n = 0; n < multiplicities.size(); ++n) {
        if (multiplicities[n] < 0) throw InputError("la_witness: negative multiplicity");
        total += static_cast<long>(n + 1) * multiplicities[n];
    }
    if (total < 1) throw InputError("la_witness: total dimension must be at least 1");

    int dim = static_cast<int>(total);
    Mat n_mat(dim, dim);
    int at = 0;
    std::vector<std::pair<int, int>> block_pos;  // (size, offset)
    for (size_t idx = 0; idx < multiplicities.size(); ++idx) {
        int size = static_cast<int>(idx) + 1;
        for (int c = 0; c < multiplicities[idx]; ++c) {
            Mat blk = nilpotent_block(size);
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j) n_mat(at + i, at + j) = blk(i, j);
            block_pos.emplace_back(size, at);
            at += size;
        }
    }

    LaWitness out;
    out.n = n_mat;
    std::vector<int> violations;
    for (size_t idx = 0; idx < multiplicities.size(); ++idx) {
        int size = static_cast<int>(idx) + 1;
        bool needs_pairs = (sign == 1) ? (size % 2 == 0) : (size % 2 == 1);
        if (needs_pairs && multiplicities[idx] % 2 != 0) violations.push_back(size);
    }
    if (!violations.empty()) {
        out.violations = violations;
        return out;
    }

    Mat a(dim, dim);
    size_t b = 0;
    while (b < block_pos.size()) {
        auto [size, off] = block_pos[b];
        bool single_ok = (sign == 1) ? (size % 2 == 1) : (size % 2 == 0);
        Mat an = antidiagonal_block(size);
        if (single_ok) {
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j) a(off + i, off + j) = an(i, j);
            ++b;
        } else {
            auto [size2, off2] = block_pos[b + 1];
            if (size2 != size) throw InternalInvariantError("la_witness: pairing mismatched blocks");
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j) {
                    a(off + i, off2 + j) = an(i, j);
                    a(off2 + i, off + j) = -an(i, j);
                }
            b += 2;
        }
    }
    // verify the constructed witness exactly
    if (!(a.transpose() - a * Rat(sign)).is_zero())
        throw InternalInvariantError("la_witness: symmetry verification failed");
    if (!(a * n_mat + n_mat.transpose() * a).is_zero())
        throw InternalInvariantError("la_witness: compatibility verification failed");
    if (det(a) == 0) throw InternalInvariantError("la_witness: witness is degenerate");
    out.pairing = std::move(a);
    return out;
}

PrimitiveGram induced_primitive_gram(const NilpotentDatum& datum, int i) {
    if (!datum.has_pairing()) throw InputError("induced_primitive_gram: pairing required");
    if (i > 0) throw InputError("induced_primitive_gram: i must be <= 0");
    MonodromyFiltration f = monodromy_filtration(datum);
    auto parts = primitive_parts(datum);
    int k = -i;
    int dim = datum.dimension();
    PrimitiveGram out;
    out.i = i;
    out.expected_sign = (k % 2 == 0 ? 1 : -1) * datum.sign();
    std::vector<std::vector<Rat>> reps = parts.count(i) ? parts[i] : std::vector<std::vector<Rat>>{};
    int p = static_cast<int>(reps.size());
    if (p == 0) {
        out.gram = Mat(0, 0);
        out.invertible = true;
        return out;
    }
    // lift each representative through N^k: x in M_{-i} with N^k x = rep (mod M_{i-1})
    Mat nk = power_of(datum.n(), k);
    const Subspace& high = f.step(-i);
    const Subspace& low = f.step(i - 1);
    Mat high_t(dim, high.dim());
    for (int r = 0; r < high.dim(); ++r)
        for (int c = 0; c < dim; ++c) high_t(c, r) = high.basis()(r, c);
    Mat nk_high = nk * high_t;
    std::vector<std::vector<Rat>> lifts;
    for (const auto& rep : reps) {
        // solve nk_high * y + low-combination = rep
        int cols = high.dim() + low.dim();
        Mat aug(dim, cols + 1);
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < high.dim(); ++c) aug(r, c) = nk_high(r, c);
            for (int c = 0; c < low.dim(); ++c) aug(r, high.dim() + c) = low.basis()(c, r);
            aug(r, cols) = rep[static_cast<size_t>(r)];
        }
        std::vector<int> piv = rref(aug);
        std::vector<Rat> sol(static_cast<size_t>(cols), Rat(0));
        for (size_t r = 0; r < piv.size(); ++r) {
            if (piv[r] == cols) throw InternalInvariantError("primitive lift: inconsistent system");
            sol[static_cast<size_t>(piv[r])] = aug(static_cast<int>(r), cols);
        }
        std::vector<Rat> x(static_cast<size_t>(dim), Rat(0));
        for (int c = 0; c < high.dim(); ++c)
            for (int r = 0; r < dim; ++r) x[static_cast<size_t>(r)] += sol[static_cast<size_t>(c)] * high_t(r, c);
        lifts.push_back(std::move(x));
    }
    // G_{ab} = lift_a^T A N^k lift_b
    const Mat& a = datum.pairing();
    Mat ank = a * nk;
    Mat g(p, p);
    for (int r = 0; r < p; ++r) {
        std::vector<Rat> right = ank.apply(lifts[static_cast<size_t>(r)]);
        for (int c = 0; c < p; ++c) {
            Rat acc(0);
            for (int t = 0; t < dim; ++t) acc += lifts[static_cast<size_t>(c)][static_cast<size_t>(t)] * right[static_cast<size_t>(t)];
            g(c, r) = acc;
        }
    }
    if (!(g.transpose() - g * Rat(out.expected_sign)).is_zero())
        throw InternalInvariantError("primitive Gram: symmetry sign mismatch");
    if (det(g) == 0)
        throw InternalInvariantError("primitive Gram: induced form is degenerate");
    out.gram = g;
    out.invertible = true;
    return out;
}

}  // namespace weilform
