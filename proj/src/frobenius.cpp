#include "weilform/frobenius.hpp"

namespace weilform {

int FrobeniusModule::dimension_cap = 64;

bool is_prime_power(const Int& q) {
    if (q < 2) return false;
    Int m = q;
    Int p(0);
    for (Int d(2); d * d <= m; ++d) {
        if (m % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return true;  // q itself prime
    while (m % p == 0) m /= p;
    return m == 1;
}

FrobeniusModule::FrobeniusModule(Mat frobenius, Int q, std::optional<long> declared_weight)
    : f_(std::move(frobenius)), q_(std::move(q)), w_(declared_weight) {
    if (f_.rows() != f_.cols()) throw InputError("FrobeniusModule: matrix must be square");
    if (f_.rows() > dimension_cap)
        throw InputError("FrobeniusModule: dimension exceeds cap " + std::to_string(dimension_cap));
    if (!is_prime_power(q_)) throw InputError("FrobeniusModule: q must be a prime power >= 2");
    if (f_.rows() > 0 && det(f_) == 0) throw InputError("FrobeniusModule: Frobenius must be invertible");
    if (w_) {
        auto cert = is_weil_poly(char_poly(*this), q_, *w_);
        if (!cert.pure)
            throw InputError("FrobeniusModule: declared weight " + std::to_string(*w_) +
                             " fails the purity certificate");
    }
}

Poly char_poly(const FrobeniusModule& m) {
    Poly chi = char_poly_monic(m.frobenius());
    // det(1 - TF) = T^b chi(1/T) for monic chi of degree b
    return chi.reversed();
}

namespace {

// w = p(F) v by Horner
std::vector<Rat> apply_poly(const Mat& f, const Poly& p, const std::vector<Rat>& v) {
    std::vector<Rat> acc(v.size(), Rat(0));
    for (int k = p.degree(); k >= 0; --k) {
        acc = f.apply(acc);
        for (size_t i = 0; i < v.size(); ++i) acc[i] += p[k] * v[i];
    }
    return acc;
}

// coprime split of lcm(a, b) into a1 * b1 with a1 | a, b1 | b
std::pair<Poly, Poly> split_lcm(const Poly& a, const Poly& b) {
    GcdFreeBasis basis = gcd_free_basis({a, b});
    Poly a1(Rat(1)), b1(Rat(1));
    for (size_t i = 0; i < basis.basis.size(); ++i) {
        int ea = basis.exponents[0][i], eb = basis.exponents[1][i];
        if (ea >= eb)
            a1 = a1 * basis.basis[i].pow(ea);
        else
            b1 = b1 * basis.basis[i].pow(eb);
    }
    return {a1, b1};
}

// vector whose annihilator is the full minimal polynomial
std::pair<std::vector<Rat>, Poly> maximal_vector(const Mat& f) {
    int n = f.rows();
    std::vector<Rat> v(n, Rat(0));
    v[0] = 1;
    Poly order = vector_annihilator(f, v);
    for (int s = 1; s < n; ++s) {
        if (order.degree() == n) break;
        std::vector<Rat> e(n, Rat(0));
        e[s] = 1;
        Poly b = vector_annihilator(f, e);
        Poly l = poly_lcm(order, b);
        if (l == order) continue;
        auto [a1, b1] = split_lcm(order, b);
        std::vector<Rat> u1 = apply_poly(f, order.divexact(a1), v);
        std::vector<Rat> u2 = apply_poly(f, b.divexact(b1), e);
        for (int i = 0; i < n; ++i) v[i] = u1[i] + u2[i];
        order = vector_annihilator(f, v);
        if (order != l) throw InternalInvariantError("maximal vector merge failed");
    }
    return {v, order};
}

}  // namespace

std::vector<Poly> invariant_factors(const FrobeniusModule& m) {
    std::vector<Poly> factors;
    Mat f = m.frobenius();
    while (f.rows() > 0) {
        auto [v, order] = maximal_vector(f);
        factors.push_back(order);
        int n = f.rows(), d = order.degree();
        if (d == n) break;
        // basis: the cyclic chain v, Fv, ..., F^{d-1}v extended by unit vectors
        std::vector<std::vector<Rat>> chain;
        chain.push_back(v);
        for (int k = 1; k < d; ++k) chain.push_back(f.apply(chain.back()));
        Subspace cyc = Subspace::from_vectors(n, chain);
        Mat basis(n, n);
        for (int k = 0; k < d; ++k)
            for (int i = 0; i < n; ++i) basis(i, k) = chain[static_cast<size_t>(k)][i];
        int col = d;
        Subspace span = cyc;
        for (int s = 0; s < n && col < n; ++s) {
            std::vector<Rat> e(n, Rat(0));
            e[s] = 1;
            if (span.contains(e)) continue;
            for (int i = 0; i < n; ++i) basis(i, col) = e[i];
            span = span.sum(Subspace::from_vectors(n, {e}));
            ++col;
        }
        if (col != n) throw InternalInvariantError("cyclic basis extension failed");
        Mat conj = inverse(basis) * f * basis;
        // the cyclic span is F-invariant, so conj is block upper triangular;
        // the quotient action is the lower-right block
        Mat quot(n - d, n - d);
        for (int i = d; i < n; ++i)
            for (int j = d; j < n; ++j) quot(i - d, j - d) = conj(i, j);
        f = quot;
    }
    std::reverse(factors.begin(), factors.end());
    for (size_t i = 0; i + 1 < factors.size(); ++i)
        if (!factors[i].divides(factors[i + 1]))
            throw InternalInvariantError("invariant factors do not form a divisibility chain");
    Poly prod(Rat(1));
    for (const auto& p : factors) prod = prod * p;
    if (prod != char_poly_monic(m.frobenius()))
        throw InternalInvariantError("invariant factors do not multiply to the characteristic polynomial");
    return factors;
}

JordanProfile jordan_profile(const FrobeniusModule& m) {
    JordanProfile profile;
    for (const Poly& f : invariant_factors(m))
        for (auto& [e, layer] : poly_squarefree_layers(f)) {
            Poly acc = profile.layers.count(e) ? profile.layers[e] : Poly(Rat(1));
            profile.layers[e] = acc * layer;
        }
    return profile;
}

int JordanProfile::dimension() const {
    int b = 0;
    for (const auto& [e, d] : layers) b += e * d.degree();
    return b;
}

namespace {

Mat companion(const Poly& monic) {
    int n = monic.degree();
    Mat c(n, n);
    for (int i = 1; i < n; ++i) c(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) c(i, n - 1) = -monic[i];
    return c;
}

}  // namespace

FrobeniusModule module_from_profile(const JordanProfile& profile, const Int& q,
                                    std::optional<long> declared_weight) {
    std::vector<Mat> blocks;
    int total = 0;
    for (const auto& [e, d] : profile.layers) {
        if (d.degree() == 0) continue;
        // split the layer into squarefree pieces with multiplicities
        for (auto& [mult, piece] : poly_squarefree_layers(d))
            for (int c = 0; c < mult; ++c) {
                blocks.push_back(companion(piece.pow(e)));
                total += blocks.back().rows();
            }
    }
    Mat f(total, total);
    int at = 0;
    for (const Mat& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) f(at + i, at + j) = b(i, j);
        at += b.rows();
    }
    return FrobeniusModule(std::move(f), q, declared_weight);
}

JordanProfile semisimplify(const JordanProfile& profile) {
    JordanProfile out;
    Poly flat(Rat(1));
    for (const auto& [e, d] : profile.layers) flat = flat * d.pow(e);
    if (flat.degree() > 0) out.layers[1] = flat;
    return out;
}

std::map<long, Poly> weight_split(const FrobeniusModule& m) {
    Poly p = char_poly(m);
    if (!p.is_integer()) throw InputError("weight_split: characteristic polynomial must be integral");
    return weight_split_poly(p, m.q());
}

}  // namespace weilform
