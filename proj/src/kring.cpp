#include "weilform/kring.hpp"

#include "weilform/duality.hpp"

namespace weilform {

namespace {

// power sums of the inverse roots of P = prod(1 - lambda T), P(0) = 1,
// from Newton's identities: p_k = -k c_k - sum_{j<k} c_j p_{k-j}
std::vector<Rat> poly_power_sums(const Poly& p, int length) {
    std::vector<Rat> s(static_cast<size_t>(length) + 1, Rat(0));
    for (int k = 1; k <= length; ++k) {
        Rat acc = p[k] * Rat(-k);
        for (int j = 1; j < k; ++j) acc -= p[j] * s[static_cast<size_t>(k - j)];
        s[static_cast<size_t>(k)] = acc;
    }
    s.erase(s.begin());
    return s;
}

// power series of prod(1-lambda T)^{m} from its trace sequence:
// P' = -(sum s_k T^{k-1}) P, P(0) = 1
std::vector<Rat> series_from_power_sums(const std::vector<Rat>& s, int length) {
    std::vector<Rat> p(static_cast<size_t>(length) + 1, Rat(0));
    p[0] = 1;
    for (int k = 1; k <= length; ++k) {
        Rat acc(0);
        for (int m = 1; m <= k; ++m) acc += s[static_cast<size_t>(m - 1)] * p[static_cast<size_t>(k - m)];
        p[static_cast<size_t>(k)] = -acc / k;
    }
    return p;
}

void normalize_const_term(Poly& p) {
    if (p.is_zero() || p[0] == 0) throw InternalInvariantError("component lost its unit constant term");
    if (p[0] != 1) p = p * (1 / p[0]);
}

// reduce num/den by their gcd and renormalize constant terms to 1
void reduce_component(Poly& num, Poly& den) {
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = num.divexact(g);
        den = den.divexact(g);
    }
    normalize_const_term(num);
    normalize_const_term(den);
}

// Pade reconstruction of a rational function with degree bounds (a, b) from
// its trace sequence; verified by re-expansion
WeightComponent reconstruct_from_power_sums(const std::vector<Rat>& s, int a, int b) {
    int L = a + b;
    std::vector<Rat> p = series_from_power_sums(s, L);
    // find D (deg <= b, D(0)=1 preferred) with (P*D) truncated past degree a zero
    WeightComponent out;
    if (b == 0) {
        std::vector<Rat> nc(p.begin(), p.begin() + a + 1);
        out.num = Poly(std::move(nc));
        out.den = Poly(Rat(1));
    } else {
        Mat sys(b, b + 1);
        for (int row = 0; row < b; ++row) {
            int k = a + 1 + row;
            for (int j = 0; j <= b; ++j)
                sys(row, j) = (k - j) >= 0 && (k - j) <= L ? p[static_cast<size_t>(k - j)] : Rat(0);
        }
        auto ker = nullspace(sys);
        if (ker.empty()) throw InternalInvariantError("Pade reconstruction: no denominator found");
        // the true denominator has constant term 1, so some kernel vector
        // has a nonzero leading entry
        std::vector<Rat>* pick = nullptr;
        for (auto& v : ker)
            if (v[0] != 0) {
                pick = &v;
                break;
            }
        if (!pick) throw InternalInvariantError("Pade reconstruction: denominator with unit term missing");
        Poly den{std::vector<Rat>(*pick)};
        if (den.is_zero()) throw InternalInvariantError("Pade reconstruction: zero denominator");
        // N = truncation of P * D to degree a
        std::vector<Rat> nc(static_cast<size_t>(a) + 1, Rat(0));
        for (int k = 0; k <= a; ++k) {
            Rat acc(0);
            for (int j = 0; j <= std::min(k, den.degree()); ++j) acc += den[j] * p[static_cast<size_t>(k - j)];
            nc[static_cast<size_t>(k)] = acc;
        }
        Poly num(std::move(nc));
        if (num.is_zero() && den.degree() < 0) throw InternalInvariantError("Pade reconstruction failed");
        if (num.is_zero()) throw InternalInvariantError("Pade reconstruction: zero numerator");
        reduce_component(num, den);
        out.num = num;
        out.den = den;
    }
    // verification: the reconstructed function must reproduce the traces
    std::vector<Rat> sn = poly_power_sums(out.num, L);
    std::vector<Rat> sd = poly_power_sums(out.den, L);
    for (int k = 0; k < L; ++k)
        if (sn[static_cast<size_t>(k)] - sd[static_cast<size_t>(k)] != s[static_cast<size_t>(k)])
            throw InternalInvariantError("Pade reconstruction: trace verification failed");
    return out;
}

}  // namespace

std::vector<Rat> component_power_sums(const WeightComponent& c, int length) {
    std::vector<Rat> sn = poly_power_sums(c.num, length);
    std::vector<Rat> sd = poly_power_sums(c.den, length);
    for (size_t i = 0; i < sn.size(); ++i) sn[i] -= sd[i];
    return sn;
}

VirtualWeilClass::VirtualWeilClass(Int q) : q_(std::move(q)) {
    if (!is_prime_power(q_)) throw InputError("VirtualWeilClass: q must be a prime power >= 2");
}

VirtualWeilClass& VirtualWeilClass::set_component(long w, Poly num, Poly den, bool validate) {
    reduce_component(num, den);
    if (num.degree() == 0 && den.degree() == 0) {
        comps_.erase(w);
        return *this;
    }
    if (validate) {
        for (const Poly* p : {&num, &den}) {
            if (p->degree() == 0) continue;
            auto cert = is_weil_poly(*p, q_, w);
            if (!cert.pure)
                throw InputError("VirtualWeilClass: component at weight " + std::to_string(w) +
                                 " is not pure");
        }
    }
    comps_[w] = WeightComponent{std::move(num), std::move(den)};
    return *this;
}

VirtualWeilClass VirtualWeilClass::unit(Int q) {
    VirtualWeilClass x(std::move(q));
    x.set_component(0, Poly::from_longs({1, -1}), Poly(Rat(1)), false);
    return x;
}

VirtualWeilClass VirtualWeilClass::from_module(const FrobeniusModule& m) {
    VirtualWeilClass x(m.q());
    for (auto& [w, f] : weight_split(m)) x.set_component(w, f, Poly(Rat(1)), false);
    return x;
}

int VirtualWeilClass::rank() const {
    int r = 0;
    for (const auto& [w, c] : comps_) r += c.rank();
    return r;
}

VirtualWeilClass kr_add(const VirtualWeilClass& x, const VirtualWeilClass& y) {
    if (x.q() != y.q()) throw InputError("kr_add: base size mismatch");
    VirtualWeilClass out(x.q());
    std::map<long, WeightComponent> merged = x.components();
    for (const auto& [w, c] : y.components()) {
        if (!merged.count(w)) {
            merged[w] = c;
            continue;
        }
        merged[w].num = merged[w].num * c.num;
        merged[w].den = merged[w].den * c.den;
    }
    for (auto& [w, c] : merged) out.set_component(w, c.num, c.den, false);
    return out;
}

VirtualWeilClass kr_neg(const VirtualWeilClass& x) {
    VirtualWeilClass out(x.q());
    for (const auto& [w, c] : x.components()) out.set_component(w, c.den, c.num, false);
    return out;
}

VirtualWeilClass kr_tensor(const VirtualWeilClass& x, const VirtualWeilClass& y) {
    if (x.q() != y.q()) throw InputError("kr_tensor: base size mismatch");
    VirtualWeilClass out(x.q());
    for (const auto& [wx, cx] : x.components())
        for (const auto& [wy, cy] : y.components()) {
            int an = cx.num.degree(), ad = cx.den.degree();
            int bn = cy.num.degree(), bd = cy.den.degree();
            int a = an * bn + ad * bd;
            int b = an * bd + ad * bn;
            if (a + b == 0) continue;
            std::vector<Rat> sx = component_power_sums(cx, a + b);
            std::vector<Rat> sy = component_power_sums(cy, a + b);
            for (size_t i = 0; i < sx.size(); ++i) sx[i] *= sy[i];
            WeightComponent prod = reconstruct_from_power_sums(sx, a, b);
            // accumulate at weight wx + wy
            VirtualWeilClass term(x.q());
            term.set_component(wx + wy, prod.num, prod.den, false);
            out = kr_add(out, term);
        }
    return out;
}

VirtualWeilClass kr_adams(const VirtualWeilClass& x, int k) {
    if (k < 1) throw InputError("kr_adams: k must be >= 1");
    VirtualWeilClass out(x.q());
    for (const auto& [w, c] : x.components()) {
        int a = c.num.degree(), b = c.den.degree();
        std::vector<Rat> s = component_power_sums(c, k * (a + b));
        std::vector<Rat> sk(static_cast<size_t>(a + b));
        for (int i = 1; i <= a + b; ++i) sk[static_cast<size_t>(i - 1)] = s[static_cast<size_t>(i * k - 1)];
        WeightComponent pc = reconstruct_from_power_sums(sk, a, b);
        VirtualWeilClass term(x.q());
        term.set_component(w * k, pc.num, pc.den, false);
        out = kr_add(out, term);
    }
    return out;
}

namespace {

// class "division by m" in the divisor group: every component of x is the
// m-th multiple of the result; recovered through scaled trace sequences
VirtualWeilClass class_divide(const VirtualWeilClass& x, int m) {
    VirtualWeilClass out(x.q());
    for (const auto& [w, c] : x.components()) {
        if (c.num.degree() % m != 0 || c.den.degree() % m != 0)
            throw InternalInvariantError("lambda recursion: component degrees not divisible");
        int a = c.num.degree() / m, b = c.den.degree() / m;
        std::vector<Rat> s = component_power_sums(c, a + b);
        for (auto& v : s) v /= m;
        WeightComponent pc = reconstruct_from_power_sums(s, a, b);
        out.set_component(w, pc.num, pc.den, false);
    }
    return out;
}

}  // namespace

VirtualWeilClass kr_lambda(const VirtualWeilClass& x, int m) {
    if (m < 0) throw InputError("kr_lambda: m must be >= 0");
    if (m == 0) return VirtualWeilClass::unit(x.q());
    if (m == 1) return x;
    std::vector<VirtualWeilClass> lam{VirtualWeilClass::unit(x.q()), x};
    for (int j = 2; j <= m; ++j) {
        VirtualWeilClass acc(x.q());
        int sign = 1;
        for (int k = 1; k <= j; ++k) {
            VirtualWeilClass term = kr_tensor(kr_adams(x, k), lam[static_cast<size_t>(j - k)]);
            acc = kr_add(acc, sign > 0 ? term : kr_neg(term));
            sign = -sign;
        }
        lam.push_back(class_divide(acc, j));
    }
    return lam[static_cast<size_t>(m)];
}

VirtualWeilClass kr_dual(const VirtualWeilClass& x) {
    VirtualWeilClass out(x.q());
    auto dualize = [](const Poly& p) {
        Poly r = p.reversed();
        return r * (1 / r[0]);
    };
    for (const auto& [w, c] : x.components()) out.set_component(-w, dualize(c.num), dualize(c.den), false);
    return out;
}

VirtualWeilClass kr_tate(const VirtualWeilClass& x, long n) {
    VirtualWeilClass out(x.q());
    Rat scale = rat_pow(Rat(x.q()), -n);
    for (const auto& [w, c] : x.components())
        out.set_component(w - 2 * n, c.num.scale_arg(scale), c.den.scale_arg(scale), false);
    return out;
}

VirtualWeilClass kr_dbar(const VirtualWeilClass& x) {
    VirtualWeilClass out(x.q());
    for (const auto& [w, c] : x.components())
        out.set_component(w, weight_dual_poly(c.num, x.q(), w), weight_dual_poly(c.den, x.q(), w), false);
    return out;
}

MembershipReport kr_membership(const VirtualWeilClass& x, int sigma) {
    if (sigma != 1 && sigma != -1) throw InputError("kr_membership: sigma must be +-1");
    MembershipReport report;
    report.sigma = sigma;
    report.member = true;
    for (const auto& [w, c] : x.components()) {
        WeightMembership wm;
        // the generators of K^w_{iota,sigma} are (-1)^w sigma-self-dual
        int gen_sign = (w % 2 == 0 ? 1 : -1) * sigma;
        Poly dn = weight_dual_poly(c.num, x.q(), w);
        Poly dd = weight_dual_poly(c.den, x.q(), w);
        wm.symmetric = (dn == c.num && dd == c.den);
        if (!wm.symmetric) wm.detail = "m_lambda != m_{q^w/lambda}";
        if (gen_sign == 1) {
            wm.member = wm.symmetric;
        } else {
            bool evens = true;
            for (const auto& [div, name] : special_divisors_weil(x.q(), w)) {
                int mult = factor_multiplicity(c.num, div) - factor_multiplicity(c.den, div);
                if (mult % 2 != 0) {
                    evens = false;
                    wm.detail = "odd multiplicity at " + name;
                }
            }
            wm.even_ok = evens;
            if (wm.symmetric) {
                // independent route: rank even and det(Fr) = q^{w b / 2}
                int b = c.rank();
                bool det_route = (b % 2 == 0);
                if (det_route) {
                    int dnn = c.num.degree(), ddd = c.den.degree();
                    Rat detfr = (dnn % 2 == 0 ? c.num.leading() : -c.num.leading()) /
                                (ddd % 2 == 0 ? c.den.leading() : -c.den.leading());
                    det_route = detfr == rat_pow(Rat(x.q()), w * static_cast<long>(b) / 2);
                }
                if (det_route != evens)
                    throw InternalInvariantError(
                        "kr_membership: multiplicity route disagrees with rank/determinant route");
            }
            wm.member = wm.symmetric && evens;
        }
        if (!wm.member) report.member = false;
        report.per_weight[w] = wm;
    }
    return report;
}

}  // namespace weilform
