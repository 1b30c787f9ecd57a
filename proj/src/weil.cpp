#include "weilform/weil.hpp"

#include <algorithm>

namespace weilform {

namespace {

Rat q_power(const Int& q, long w) { return rat_pow(Rat(q), w); }

Poly squarefree_part(const Poly& p) {
    if (p.degree() <= 0) return p.monic();
    return p.divexact(poly_gcd(p, p.derivative())).monic();
}

// roots of t are permuted by phi(z) = q^w / conj(z); a root is on the
// circle |z|^2 = q^w iff phi fixes it.  Classifies every box of the system.
std::vector<bool> phi_classify(SquarefreeBoxes& boxes, const Int& q, long w) {
    boxes.exclude_zero();
    const Rat qw = q_power(q, w);
    size_t n = boxes.size();
    std::vector<int> state(n, -1);  // -1 undecided, 0 off, 1 on
    int guard = 0;
    while (true) {
        bool undecided = false;
        for (size_t i = 0; i < n; ++i) {
            if (state[i] >= 0) continue;
            BoxC image = boxes.rect(i).conj().recip() * BoxC(QIv::point(qw), QIv::point(Rat(0)));
            bool hits_self = image.intersects(boxes.rect(i));
            bool hits_other = false;
            for (size_t j = 0; j < n && !hits_other; ++j)
                if (j != i && image.intersects(boxes.rect(j))) hits_other = true;
            if (!hits_self) {
                state[i] = 0;  // phi(root) lands in a different box
            } else if (!hits_other) {
                state[i] = 1;  // phi(root) can only be this box's root
            } else {
                undecided = true;
            }
        }
        if (!undecided) break;
        for (size_t i = 0; i < n; ++i)
            if (state[i] < 0) boxes.refine(i);
        if (++guard > 4096) throw InternalInvariantError("phi classification did not terminate");
    }
    std::vector<bool> on(n);
    for (size_t i = 0; i < n; ++i) on[i] = state[i] == 1;
    return on;
}

// exact reconstruction of prod (T - root_i) over the selected boxes; the
// true product must have integer coefficients, else nullopt
std::optional<Poly> reconstruct_integer_factor(SquarefreeBoxes& boxes, const std::vector<size_t>& sel,
                                               const Poly& parent) {
    if (sel.empty()) return Poly(Rat(1));
    int guard = 0;
    while (true) {
        // interval coefficients of the product of the linear factors T - root
        std::vector<BoxC> coeff{BoxC(QIv::point(Rat(1)), QIv::point(Rat(0)))};
        for (size_t i : sel) {
            BoxC root = boxes.is_exact(i) ? BoxC::point(boxes.exact_point(i)) : boxes.rect(i);
            std::vector<BoxC> next(coeff.size() + 1, BoxC(QIv::point(Rat(0)), QIv::point(Rat(0))));
            for (size_t k = 0; k < coeff.size(); ++k) {
                next[k + 1] = next[k + 1] + coeff[k];
                BoxC m = coeff[k] * root;
                next[k] = next[k] + BoxC(-m.re, -m.im);
            }
            coeff = std::move(next);
        }
        bool tight = true;
        std::vector<Rat> cand(coeff.size());
        for (size_t k = 0; k < coeff.size(); ++k) {
            if (!coeff[k].im.contains_zero()) return std::nullopt;  // not even real
            if (coeff[k].re.width() >= 1) {
                tight = false;
                break;
            }
            Int lo_ceil = -rat_floor(-coeff[k].re.lo);  // ceil of the lower bound
            if (!coeff[k].re.contains(Rat(lo_ceil))) return std::nullopt;  // no integer inside
            cand[k] = Rat(lo_ceil);
        }
        if (tight) {
            Poly g{std::vector<Rat>(cand)};
            if (g.degree() == static_cast<int>(sel.size()) && g.leading() == 1 && g.divides(parent))
                return g;
            // with every interval narrower than 1, an integer true product
            // would have been found; division failure proves non-integrality
            return std::nullopt;
        }
        for (size_t i : sel) boxes.refine(i);
        if (++guard > 4096) throw InternalInvariantError("factor reconstruction did not terminate");
    }
}

}  // namespace

Poly weight_dual_poly(const Poly& p, const Int& q, long w) {
    if (p.is_zero()) throw InputError("weight_dual_poly: zero polynomial");
    if (p[0] != 1) throw InputError("weight_dual_poly: constant term must be 1");
    int b = p.degree();
    if (b == 0) return p;
    std::vector<Rat> c(static_cast<size_t>(b) + 1);
    Rat qw = q_power(q, w);
    Rat pw(1);
    const Rat& lead = p.leading();
    for (int j = 0; j <= b; ++j) {
        c[j] = p[b - j] * pw / lead;
        pw *= qw;
    }
    return Poly(std::move(c));
}

Poly weight_dual_monic(const Poly& s, const Int& q, long w) {
    if (s.is_zero() || s[0] == 0) throw InputError("weight_dual_monic: needs nonzero constant term");
    int m = s.degree();
    // T^m s(q^w/T) has coefficient s_{m-i} q^{w(m-i)} at T^i
    std::vector<Rat> c(static_cast<size_t>(m) + 1);
    Rat qw = q_power(q, w);
    Rat pw(1);
    for (int i = m; i >= 0; --i) {
        c[i] = s[m - i] * pw;
        pw *= qw;
    }
    return Poly(std::move(c)).monic();
}

Poly on_circle_factor(const Poly& s_in, const Int& q, long w) {
    Poly s = s_in.monic();
    if (s.degree() <= 0) return Poly(Rat(1));
    if (s[0] == 0) throw InputError("on_circle_factor: root at 0");
    Poly on(Rat(1));
    // rational points on the circle are exactly +-q^{w/2}; the only real
    // irrational ones have minimal polynomial T^2 - q^w.  Decide them by
    // exact divisibility before any numerics.
    if (auto r = exact_sqrt_qw(q, w)) {
        for (const Rat& sp : {*r, Rat(-*r)}) {
            Poly lin(std::vector<Rat>{-sp, Rat(1)});
            if (lin.divides(s)) {
                on = on * lin;
                s = s.divexact(lin).monic();
            }
        }
    } else {
        Poly quad(std::vector<Rat>{-q_power(q, w), Rat(0), Rat(1)});
        if (quad.divides(s)) {
            on = on * quad;
            s = s.divexact(quad).monic();
        }
    }
    if (s.degree() <= 0) return on;
    Poly t = poly_gcd(s, weight_dual_monic(s, q, w));
    if (t.degree() <= 0) return on;
    if (weight_dual_monic(t, q, w) != t)
        throw InternalInvariantError("gcd with weight dual is not self-dual");
    SquarefreeBoxes boxes(t);
    std::vector<bool> on_flags = phi_classify(boxes, q, w);
    std::vector<size_t> sel;
    for (size_t i = 0; i < boxes.size(); ++i)
        if (on_flags[i]) sel.push_back(i);
    if (sel.empty()) return on;
    if (sel.size() == boxes.size()) return on * t;
    auto g = reconstruct_integer_factor(boxes, sel, t);
    if (!g)
        throw NonIntegralWeightError(
            "roots on |z|^2 = q^" + std::to_string(w) +
            " are not Galois stable: not q-Weil integers");
    return on * *g;
}

WeilCertificate is_weil_poly(const Poly& p, const Int& q, long w) {
    if (p.is_zero() || p[0] != 1) throw InputError("is_weil_poly: p(0) must be 1");
    if (q < 2) throw InputError("is_weil_poly: q must be >= 2");
    WeilCertificate cert;
    cert.integral = p.is_integer();
    if (!cert.integral) {
        cert.pure = false;
        return cert;
    }
    if (p.degree() == 0) {
        cert.pure = true;
        return cert;
    }
    Poly s = p.reversed();  // monic, roots are the inverse roots of p
    for (auto& [e, layer] : poly_squarefree_layers(s)) {
        Poly onf;
        try {
            onf = on_circle_factor(layer, q, w);
        } catch (const NonIntegralWeightError&) {
            onf = Poly(Rat(1));  // conservative: treat the unstable part as off-circle
        }
        Poly off = layer.divexact(onf).monic();
        if (off.degree() > 0) {
            for (const RootBox& b : isolate_roots(off)) {
                RootBox rb = b;
                rb.multiplicity = e;
                rb.layer = e;
                cert.offending.push_back(rb);
            }
        }
    }
    cert.pure = cert.offending.empty();
    return cert;
}

std::map<long, Poly> weight_split_poly(const Poly& p, const Int& q) {
    if (p.is_zero() || p[0] != 1) throw InputError("weight_split_poly: p(0) must be 1");
    if (!p.is_integer()) throw InputError("weight_split_poly: integer coefficients required");
    std::map<long, Poly> out;
    if (p.degree() == 0) return out;
    Poly s = p.reversed();
    for (auto& [e, layer] : poly_squarefree_layers(s)) {
        // candidate weights from modulus intervals of the layer's roots
        SquarefreeBoxes probe(layer);
        probe.exclude_zero();
        std::vector<long> cands;
        for (size_t i = 0; i < probe.size(); ++i) {
            int guard = 0;
            while (true) {
                QIv a2 = probe.is_exact(i)
                             ? QIv::point(probe.exact_point(i).re * probe.exact_point(i).re +
                                          probe.exact_point(i).im * probe.exact_point(i).im)
                             : probe.rect(i).abs2();
                std::vector<long> here;
                Rat qr(q);
                // scan q^w upward/downward across the interval
                Rat pw(1);
                long wv = 0;
                while (pw <= a2.hi) {
                    if (pw >= a2.lo) here.push_back(wv);
                    pw *= qr;
                    ++wv;
                }
                pw = Rat(1) / qr;
                wv = -1;
                while (pw >= a2.lo) {
                    if (pw <= a2.hi) here.push_back(wv);
                    pw /= qr;
                    --wv;
                }
                if (here.size() <= 1) {
                    for (long x : here) cands.push_back(x);
                    break;
                }
                probe.refine(i);
                if (++guard > 4096)
                    throw InternalInvariantError("weight candidate narrowing did not terminate");
            }
        }
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        Poly rest = layer;
        for (long w : cands) {
            if (rest.degree() <= 0) break;
            Poly f = on_circle_factor(rest, q, w);
            if (f.degree() > 0) {
                rest = rest.divexact(f).monic();
                Poly part = f.reversed();  // back to det(1 - TF) convention
                part = part * (1 / part[0]);
                if (!part.is_integer())
                    throw InternalInvariantError("weight factor not integral");
                Poly acc = out.count(w) ? out[w] : Poly(Rat(1));
                out[w] = acc * part.pow(e);
            }
        }
        if (rest.degree() > 0) {
            std::vector<RootBox> leftover = isolate_roots(rest);
            throw NonIntegralWeightError("inverse root has no integral weight: " +
                                         leftover.front().describe());
        }
    }
    // reassembly check
    Poly prod(Rat(1));
    for (auto& [w, f] : out) prod = prod * f;
    if (prod != p) throw InternalInvariantError("weight split does not reassemble the input");
    return out;
}

}  // namespace weilform
