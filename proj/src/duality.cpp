#include "weilform/duality.hpp"

#include <functional>

namespace weilform {

std::vector<std::pair<Poly, std::string>> special_divisors_monic(const Int& q, long w) {
    std::vector<std::pair<Poly, std::string>> divs;
    if (auto r = exact_sqrt_qw(q, w)) {
        divs.emplace_back(Poly(std::vector<Rat>{-*r, Rat(1)}), "+q^{w/2}");
        divs.emplace_back(Poly(std::vector<Rat>{*r, Rat(1)}), "-q^{w/2}");
    } else {
        divs.emplace_back(Poly(std::vector<Rat>{-rat_pow(Rat(q), w), Rat(0), Rat(1)}), "+-sqrt(q^w)");
    }
    return divs;
}

std::vector<std::pair<Poly, std::string>> special_divisors_weil(const Int& q, long w) {
    std::vector<std::pair<Poly, std::string>> divs;
    if (auto r = exact_sqrt_qw(q, w)) {
        divs.emplace_back(Poly(std::vector<Rat>{Rat(1), -*r}), "+q^{w/2}");
        divs.emplace_back(Poly(std::vector<Rat>{Rat(1), *r}), "-q^{w/2}");
    } else {
        divs.emplace_back(Poly(std::vector<Rat>{Rat(1), Rat(0), -rat_pow(Rat(q), w)}), "+-sqrt(q^w)");
    }
    return divs;
}

std::vector<Mat> invariant_pairing_space(const FrobeniusModule& m, long w, int sigma) {
    const Mat& f = m.frobenius();
    int d = f.rows();
    Rat qw = rat_pow(Rat(m.q()), w);
    // unknowns: entries of B, optionally restricted to the (anti)symmetric part
    std::vector<std::pair<int, int>> vars;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (sigma == 0)
                vars.emplace_back(i, j);
            else if (sigma == 1 && i <= j)
                vars.emplace_back(i, j);
            else if (sigma == -1 && i < j)
                vars.emplace_back(i, j);
        }
    // F^T B F - q^w B = 0, one equation per matrix position
    Mat sys(d * d, static_cast<int>(vars.size()));
    for (size_t k = 0; k < vars.size(); ++k) {
        auto [a, b] = vars[k];
        Mat basis(d, d);
        basis(a, b) = 1;
        if (sigma != 0 && (a != b)) basis(b, a) = Rat(sigma);
        Mat lhs = f.transpose() * basis * f - basis * qw;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) sys(i * d + j, static_cast<int>(k)) = lhs(i, j);
    }
    std::vector<Mat> out;
    for (auto& x : nullspace(sys)) {
        Mat b(d, d);
        for (size_t k = 0; k < vars.size(); ++k) {
            auto [i, j] = vars[k];
            b(i, j) = x[k];
            if (sigma != 0 && i != j) b(j, i) = Rat(sigma) * x[k];
        }
        out.push_back(std::move(b));
    }
    return out;
}

namespace {

// determinant of an integer-entry matrix by Bareiss fraction-free
// elimination; intermediate values stay integral
Rat det_integer(Mat m) {
    int n = m.rows();
    if (n == 0) return Rat(1);
    Rat prev(1);
    int sign = 1;
    for (int c = 0; c + 1 < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) return Rat(0);
        if (p != c) {
            for (int j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
            sign = -sign;
        }
        for (int i = c + 1; i < n; ++i) {
            for (int j = c + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(c, c) - m(i, c) * m(c, j)) / prev;
            m(i, c) = 0;
        }
        prev = m(c, c);
    }
    Rat result = m(n - 1, n - 1);
    return sign > 0 ? result : Rat(-result);
}

}  // namespace

std::optional<Mat> find_nondegenerate(const std::vector<Mat>& basis) {
    if (basis.empty()) return std::nullopt;
    int d = basis[0].rows();
    if (d == 0) return Mat(0, 0);  // the zero space carries the empty perfect pairing
    for (const Mat& b : basis)
        if (b.rows() != d || b.cols() != d) throw InputError("find_nondegenerate: shape mismatch");
    size_t k = basis.size();

    // certificate: a common kernel vector makes every combination singular
    {
        Mat stacked(static_cast<int>(k) * d, d);
        for (size_t t = 0; t < k; ++t)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) stacked(static_cast<int>(t) * d + i, j) = basis[t](i, j);
        if (rank(stacked) < d) return std::nullopt;
    }
    // certificate: alternating forms on odd-dimensional spaces are singular
    {
        bool all_skew = true;
        for (const Mat& b : basis)
            if (!(b.transpose() + b).is_zero()) all_skew = false;
        if (all_skew && d % 2 == 1) return std::nullopt;
    }

    // integer-scaled copies keep the sweep in fraction-free arithmetic
    std::vector<Mat> zbasis;
    for (const Mat& b : basis) {
        Int den(1);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), b(i, j).get_den().get_mpz_t());
        zbasis.push_back(b * Rat(den));
    }

    // greedy rank-ascent probe: often reaches an invertible combination
    // immediately; a miss falls through to the exhaustive sweep
    {
        Mat probe(d, d);
        int r = 0;
        for (const Mat& b : zbasis) {
            Mat cand = probe + b;
            int rc = rank(cand);
            if (rc > r) {
                probe = cand;
                r = rc;
            }
        }
        if (r == d) return probe;
    }

    // deterministic sweep over the principal simplex lattice
    // {t in N^k : sum t_i <= d}: det is a polynomial of total degree <= d in
    // the coefficients, and such a polynomial vanishing on the whole lattice
    // is identically zero, so the sweep decides existence
    {
        double est = 1;
        for (int i = 1; i <= d; ++i) est *= static_cast<double>(k + i) / i;
        if (est > 2e7)
            throw InputError("find_nondegenerate: pairing space too large for the deterministic sweep");
    }
    std::vector<int> tuple(k, 0);
    std::optional<Mat> found;
    // enumerate by increasing coordinate sum so simple combinations come first
    std::function<bool(size_t, int)> rec = [&](size_t idx, int left) -> bool {
        if (idx == k) {
            if (left != 0) return false;
            Mat combo(d, d);
            for (size_t t = 0; t < k; ++t)
                if (tuple[t]) combo = combo + zbasis[t] * Rat(tuple[t]);
            if (det_integer(combo) != 0) {
                found = combo;
                return true;
            }
            return false;
        }
        for (int v = 0; v <= left; ++v) {
            tuple[idx] = v;
            if (rec(idx + 1, left - v)) return true;
        }
        tuple[idx] = 0;
        return false;
    };
    for (int total = 1; total <= d; ++total)
        if (rec(0, total)) return found;
    return std::nullopt;
}

namespace {

DualityVerdict multiplicity_route(const JordanProfile& profile, const Int& q, long w) {
    DualityVerdict v;
    v.self_dual = true;
    for (const auto& [e, d] : profile.layers)
        if (d.degree() > 0 && weight_dual_monic(d, q, w) != d) v.self_dual = false;
    v.plus_self_dual = v.self_dual;
    v.minus_self_dual = v.self_dual;
    auto divs = special_divisors_monic(q, w);
    for (const auto& [e, layer] : profile.layers) {
        for (const auto& [div, name] : divs) {
            int mult = factor_multiplicity(layer, div);
            if (mult % 2 == 0) continue;
            if (e % 2 == 0) {
                v.plus_self_dual = false;
                v.refusal_reasons.push_back({name, e, "odd multiplicity at even block size (blocks 1-self-dual violation)"});
            } else {
                v.minus_self_dual = false;
                v.refusal_reasons.push_back({name, e, "odd multiplicity at odd block size (blocks -1-self-dual violation)"});
            }
        }
    }
    if (!v.self_dual) {
        v.plus_self_dual = false;
        v.minus_self_dual = false;
    }
    return v;
}

}  // namespace

DualityVerdict classify_self_duality(const FrobeniusModule& m, long w) {
    auto cert = is_weil_poly(char_poly(m), m.q(), w);
    if (!cert.pure) {
        std::string detail = cert.integral ? (cert.offending.empty() ? "" : cert.offending.front().describe())
                                           : "non-integral coefficients";
        throw PurityError("classify_self_duality: module is not pure of weight " + std::to_string(w) +
                          (detail.empty() ? "" : " (" + detail + ")"));
    }
    JordanProfile profile = jordan_profile(m);
    DualityVerdict v = multiplicity_route(profile, m.q(), w);
    if (m.dimension() == 0) {
        // the zero module carries the empty perfect pairing of either sign
        v.witness = Mat(0, 0);
        v.witness_sign = 1;
        return v;
    }

    // independent witness route
    auto wit_self = find_nondegenerate(invariant_pairing_space(m, w, 0));
    auto wit_plus = find_nondegenerate(invariant_pairing_space(m, w, +1));
    auto wit_minus = find_nondegenerate(invariant_pairing_space(m, w, -1));
    if (wit_self.has_value() != v.self_dual || wit_plus.has_value() != v.plus_self_dual ||
        wit_minus.has_value() != v.minus_self_dual)
        throw InternalInvariantError(
            "classify_self_duality: multiplicity criterion disagrees with witness search");
    if (wit_plus) {
        v.witness = *wit_plus;
        v.witness_sign = 1;
    } else if (wit_minus) {
        v.witness = *wit_minus;
        v.witness_sign = -1;
    }
    return v;
}

DualityVerdict two_out_of_three(const FrobeniusModule& whole, const FrobeniusModule& part, long w,
                                int sigma) {
    if (sigma != 1 && sigma != -1) throw InputError("two_out_of_three: sigma must be +-1");
    if (whole.q() != part.q()) throw InputError("two_out_of_three: base size mismatch");
    JordanProfile pw = jordan_profile(whole), pp = jordan_profile(part);
    JordanProfile comp;
    for (const auto& [e, d] : pw.layers) {
        Poly dp = pp.layers.count(e) ? pp.layers.at(e) : Poly(Rat(1));
        if (!dp.divides(d)) throw InputError("two_out_of_three: part profile does not layer-divide the whole");
        Poly q = d.divexact(dp).monic();
        if (q.degree() > 0) comp.layers[e] = q;
    }
    for (const auto& [e, d] : pp.layers)
        if (!pw.layers.count(e) && d.degree() > 0)
            throw InputError("two_out_of_three: part profile does not layer-divide the whole");
    DualityVerdict vw = classify_self_duality(whole, w);
    DualityVerdict vp = classify_self_duality(part, w);
    auto has = [&](const DualityVerdict& v) { return sigma == 1 ? v.plus_self_dual : v.minus_self_dual; };
    if (!has(vw) || !has(vp))
        throw InputError("two_out_of_three: whole and part must both be sigma-self-dual");
    FrobeniusModule cm = module_from_profile(comp, whole.q());
    DualityVerdict vc = classify_self_duality(cm, w);
    if (!has(vc))
        throw InternalInvariantError("two_out_of_three: complement failed to be sigma-self-dual");
    return vc;
}

}  // namespace weilform
