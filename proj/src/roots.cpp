#include "weilform/roots.hpp"

#include <algorithm>
#include <sstream>

namespace weilform {

namespace {

int sgn(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// scale by a positive rational so coefficients become coprime integers;
// unlike primitive_z this never flips the sign
Poly primitive_signed(const Poly& p) {
    if (p.is_zero()) return p;
    Poly q = p.primitive_z();
    if (sgn(q.leading()) != sgn(p.leading())) q = -q;
    return q;
}

Poly squarefree_part(const Poly& p) {
    if (p.degree() <= 0) return p.monic();
    return p.divexact(poly_gcd(p, p.derivative())).monic();
}

// evaluate s at a Gaussian rational point
std::pair<Rat, Rat> eval_complex(const Poly& s, const GaussRat& z) {
    Rat re(0), im(0);
    for (int k = s.degree(); k >= 0; --k) {
        Rat nre = re * z.re - im * z.im + s[k];
        Rat nim = re * z.im + im * z.re;
        re = nre;
        im = nim;
    }
    return {re, im};
}

Poly shift_up(const Poly& p) {
    if (p.is_zero()) return p;
    std::vector<Rat> c(static_cast<size_t>(p.degree()) + 2, Rat(0));
    for (int i = 0; i <= p.degree(); ++i) c[static_cast<size_t>(i) + 1] = p[i];
    return Poly(std::move(c));
}

// s(x + i c) = u(x) + i v(x)
std::pair<Poly, Poly> restrict_horizontal(const Poly& s, const Rat& c) {
    Poly u, v;
    for (int k = s.degree(); k >= 0; --k) {
        Poly nu = shift_up(u) - v * c + Poly(s[k]);
        Poly nv = shift_up(v) + u * c;
        u = nu;
        v = nv;
    }
    return {u, v};
}

// s(c + i y) = u(y) + i v(y)
std::pair<Poly, Poly> restrict_vertical(const Poly& s, const Rat& c) {
    Poly u, v;
    for (int k = s.degree(); k >= 0; --k) {
        Poly nu = u * c - shift_up(v) + Poly(s[k]);
        Poly nv = v * c + shift_up(u);
        u = nu;
        v = nv;
    }
    return {u, v};
}

int var_at(const std::vector<Poly>& chain, const Rat& x) {
    int last = 0, vars = 0;
    for (const auto& p : chain) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++vars;
        last = s;
    }
    return vars;
}

}  // namespace

std::vector<Poly> sturm_chain(const Poly& u) {
    std::vector<Poly> chain;
    chain.push_back(primitive_signed(u));
    Poly d = u.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(primitive_signed(d));
    while (true) {
        const Poly& a = chain[chain.size() - 2];
        const Poly& b = chain.back();
        Poly r = a.divmod(b).second;
        if (r.is_zero()) break;
        chain.push_back(primitive_signed(-r));
    }
    return chain;
}

int sturm_count_open(const std::vector<Poly>& chain, const Rat& a, const Rat& b) {
    // counts roots in (a, b]; callers guarantee b is not a root
    return var_at(chain, a) - var_at(chain, b);
}

namespace {

struct SiteList {
    Poly u;  // squarefree
    std::vector<Poly> chain;
    std::vector<RealRootSite> sites;
};

void refine_site(SiteList& sl, RealRootSite& s) {
    if (s.exact()) return;
    Rat m = (s.lo + s.hi) / 2;
    if (sl.u.eval(m) == 0) {
        s.lo = s.hi = m;
        return;
    }
    if (sturm_count_open(sl.chain, s.lo, m) == 1)
        s.hi = m;
    else
        s.lo = m;
}

void isolate_rec(SiteList& sl, const Rat& a, const Rat& b, int cnt, int depth) {
    if (cnt == 0) return;
    if (depth > 4096) throw InternalInvariantError("real root isolation did not terminate");
    if (cnt == 1) {
        sl.sites.push_back({a, b});
        return;
    }
    Rat m = (a + b) / 2;
    if (sl.u.eval(m) == 0) {
        sl.sites.push_back({m, m});
        Rat delta = (b - a) / 4;
        while (true) {
            if (sl.u.eval(m - delta) == 0 || sl.u.eval(m + delta) == 0) {
                delta = delta * Rat(3, 5);
                continue;
            }
            if (sturm_count_open(sl.chain, m - delta, m + delta) == 1) break;
            delta /= 2;
        }
        int c1 = sturm_count_open(sl.chain, a, m - delta);
        isolate_rec(sl, a, m - delta, c1, depth + 1);
        isolate_rec(sl, m + delta, b, cnt - 1 - c1, depth + 1);
        return;
    }
    int c1 = sturm_count_open(sl.chain, a, m);
    isolate_rec(sl, a, m, c1, depth + 1);
    isolate_rec(sl, m, b, cnt - c1, depth + 1);
}

SiteList make_sites(const Poly& usf, const Rat& a, const Rat& b) {
    SiteList sl;
    sl.u = usf;
    sl.chain = sturm_chain(usf);
    if (usf.degree() >= 1) {
        int total = sturm_count_open(sl.chain, a, b);
        isolate_rec(sl, a, b, total, 0);
        // clear sites off the endpoints so samples fit on both sides
        for (auto& s : sl.sites)
            while (!s.exact() && (s.lo <= a || s.hi >= b)) refine_site(sl, s);
    }
    std::sort(sl.sites.begin(), sl.sites.end(),
              [](const RealRootSite& x, const RealRootSite& y) { return x.lo < y.lo; });
    return sl;
}

}  // namespace

std::vector<RealRootSite> isolate_real_roots(const Poly& u, const Rat& a, const Rat& b) {
    if (u.degree() < 0) throw InputError("isolate_real_roots: zero polynomial");
    if (u.eval(a) == 0 || u.eval(b) == 0) throw InputError("isolate_real_roots: endpoint is a root");
    return make_sites(u, a, b).sites;
}

std::optional<int> count_roots_in_rect(const Poly& s, const BoxC& rect) {
    if (s.is_zero()) throw InputError("count_roots_in_rect: zero polynomial");
    if (s.degree() == 0) return 0;
    const Rat &x0 = rect.re.lo, &x1 = rect.re.hi, &y0 = rect.im.lo, &y1 = rect.im.hi;
    if (!(x0 < x1) || !(y0 < y1)) throw InputError("count_roots_in_rect: empty rectangle");
    const GaussRat corners[4] = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
    for (const auto& z : corners) {
        auto [re, im] = eval_complex(s, z);
        if (re == 0 && im == 0) return std::nullopt;
    }

    // Edge descriptors in CCW order; reversed edges flip the sample order.
    struct Edge {
        bool horizontal;
        Rat level, ta, tb;
        bool reversed;
    };
    const Edge edges[4] = {
        {true, y0, x0, x1, false},
        {false, x1, y0, y1, false},
        {true, y1, x0, x1, true},
        {false, x0, y0, y1, true},
    };

    std::vector<int> quadrants;
    for (const Edge& e : edges) {
        auto [u, v] = e.horizontal ? restrict_horizontal(s, e.level) : restrict_vertical(s, e.level);
        if (u.is_zero() && v.is_zero())
            throw InternalInvariantError("restriction of nonzero polynomial vanished");
        if (u.is_zero() || v.is_zero()) {
            // edge maps into one axis: no turning inside, but roots of the
            // other component would be roots of s on the edge
            const Poly& w = u.is_zero() ? v : u;
            Poly wsf = squarefree_part(w);
            for (const Rat& t : {e.ta, e.tb}) {
                Poly lin(std::vector<Rat>{-t, Rat(1)});
                while (lin.divides(wsf)) wsf = wsf.divexact(lin).monic();
            }
            if (wsf.degree() >= 1) {
                auto chain = sturm_chain(wsf);
                if (sturm_count_open(chain, e.ta, e.tb) > 0) return std::nullopt;
            }
            continue;
        }
        Poly g = poly_gcd(u, v);
        if (g.degree() >= 1) {
            Poly gsf = squarefree_part(g);
            for (const Rat& t : {e.ta, e.tb}) {
                Poly lin(std::vector<Rat>{-t, Rat(1)});
                while (lin.divides(gsf)) gsf = gsf.divexact(lin).monic();
            }
            if (gsf.degree() >= 1) {
                auto chain = sturm_chain(gsf);
                if (sturm_count_open(chain, e.ta, e.tb) > 0) return std::nullopt;  // root of s on edge
            }
        }
        auto strip_ends = [&](Poly p) {
            for (const Rat& t : {e.ta, e.tb}) {
                Poly lin(std::vector<Rat>{-t, Rat(1)});
                while (lin.divides(p)) p = p.divexact(lin).monic();
            }
            return p;
        };
        SiteList su = make_sites(strip_ends(squarefree_part(u)), e.ta, e.tb);
        SiteList sv = make_sites(strip_ends(squarefree_part(v)), e.ta, e.tb);
        // u-sites and v-sites must be pairwise disjoint before sampling
        bool again = true;
        int guard = 0;
        while (again) {
            again = false;
            for (auto& a : su.sites)
                for (auto& b : sv.sites) {
                    if (a.hi < b.lo || b.hi < a.lo) continue;
                    refine_site(su, a);
                    refine_site(sv, b);
                    again = true;
                }
            if (++guard > 4096) throw InternalInvariantError("edge site separation did not terminate");
        }
        std::vector<RealRootSite> all = su.sites;
        all.insert(all.end(), sv.sites.begin(), sv.sites.end());
        std::sort(all.begin(), all.end(),
                  [](const RealRootSite& x, const RealRootSite& y) { return x.lo < y.lo; });
        std::vector<Rat> samples;
        Rat prev = e.ta;
        for (const auto& site : all) {
            samples.push_back((prev + site.lo) / 2);
            prev = site.hi;
        }
        samples.push_back((prev + e.tb) / 2);
        std::vector<int> qs;
        for (const Rat& t : samples) {
            int a = sgn(u.eval(t)), b = sgn(v.eval(t));
            if (a == 0 || b == 0)
                throw InternalInvariantError("boundary walk sample hit an axis");
            int q = (a > 0) ? (b > 0 ? 0 : 3) : (b > 0 ? 1 : 2);
            qs.push_back(q);
        }
        if (e.reversed) std::reverse(qs.begin(), qs.end());
        quadrants.insert(quadrants.end(), qs.begin(), qs.end());
    }
    if (quadrants.empty()) return 0;
    long total = 0;
    for (size_t i = 0; i < quadrants.size(); ++i) {
        int d = (quadrants[(i + 1) % quadrants.size()] - quadrants[i] + 4) % 4;
        if (d == 1)
            ++total;
        else if (d == 3)
            --total;
        else if (d == 2)
            throw InternalInvariantError("boundary walk skipped a quadrant");
    }
    if (total % 4 != 0) throw InternalInvariantError("boundary walk winding not integral");
    return static_cast<int>(total / 4);
}

namespace {

Rat cauchy_bound(const Poly& s) {
    Rat m(0);
    for (int i = 0; i < s.degree(); ++i) m = std::max(m, rat_abs(s[i] / s.leading()));
    return m + 1;
}

// count with boundary perturbation handled by the caller via nullopt
int checked_count(const Poly& s, const BoxC& rect) {
    auto c = count_roots_in_rect(s, rect);
    if (!c) throw InternalInvariantError("unexpected boundary root");
    return *c;
}

}  // namespace

SquarefreeBoxes::SquarefreeBoxes(Poly s) : s_(s.monic()) {
    if (s_.degree() < 0) throw InputError("SquarefreeBoxes: zero polynomial");
    if (s_.degree() == 0) return;
    Rat M = cauchy_bound(s_);
    std::vector<RealRootSite> rsites = isolate_real_roots(s_, -M, M);
    for (const auto& site : rsites) {
        if (site.exact()) {
            Rat delta = Rat(1, 2);
            while (true) {
                BoxC r(QIv(site.lo - delta, site.lo + delta), QIv(-delta, delta));
                auto c = count_roots_in_rect(s_, r);
                if (c && *c == 1) {
                    rects_.push_back(r);
                    break;
                }
                delta = delta * (c ? Rat(1, 2) : Rat(3, 5));
            }
            exact_.push_back(true);
            points_.push_back(GaussRat{site.lo, Rat(0)});
        } else {
            RealRootSite cur = site;
            SiteList sl;
            sl.u = s_;
            sl.chain = sturm_chain(s_);
            while (true) {
                if (cur.exact()) break;  // refinement found the exact root
                Rat h = (cur.hi - cur.lo) / 2;
                BoxC r(QIv(cur.lo, cur.hi), QIv(-h, h));
                auto c = count_roots_in_rect(s_, r);
                if (c && *c == 1) {
                    rects_.push_back(r);
                    exact_.push_back(false);
                    points_.push_back(GaussRat{Rat(0), Rat(0)});
                    break;
                }
                refine_site(sl, cur);
            }
            if (cur.exact()) {
                Rat delta = Rat(1, 4);
                while (true) {
                    BoxC r(QIv(cur.lo - delta, cur.lo + delta), QIv(-delta, delta));
                    auto c = count_roots_in_rect(s_, r);
                    if (c && *c == 1) {
                        rects_.push_back(r);
                        break;
                    }
                    delta = delta * (c ? Rat(1, 2) : Rat(3, 5));
                }
                exact_.push_back(true);
                points_.push_back(GaussRat{cur.lo, Rat(0)});
            }
        }
    }
    int n_complex = s_.degree() - static_cast<int>(rsites.size());
    if (n_complex > 0) {
        int target = n_complex / 2;
        // bottom of the upper strip slides down until all nonreal roots with
        // positive imaginary part are above it
        Rat eps = Rat(1, 2);
        while (true) {
            auto c = count_roots_in_rect(s_, BoxC(QIv(-M, M), QIv(eps, M)));
            if (!c) {
                eps = eps * Rat(61, 64);
                continue;
            }
            if (*c == target) break;
            eps /= 2;
        }
        std::vector<std::pair<BoxC, int>> work{{BoxC(QIv(-M, M), QIv(eps, M)), target}};
        while (!work.empty()) {
            auto [r, cnt] = work.back();
            work.pop_back();
            if (cnt == 1) {
                rects_.push_back(r);
                exact_.push_back(false);
                points_.push_back(GaussRat{Rat(0), Rat(0)});
                // mirror box for the conjugate root
                rects_.push_back(BoxC(r.re, QIv(-r.im.hi, -r.im.lo)));
                exact_.push_back(false);
                points_.push_back(GaussRat{Rat(0), Rat(0)});
                continue;
            }
            bool split_x = r.re.width() >= r.im.width();
            static const Rat offsets[] = {Rat(1, 2), Rat(15, 32), Rat(17, 32), Rat(29, 64),
                                          Rat(35, 64), Rat(7, 16), Rat(9, 16)};
            bool done = false;
            for (const Rat& f : offsets) {
                BoxC a = r, b = r;
                if (split_x) {
                    Rat cut = r.re.lo + r.re.width() * f;
                    a.re = QIv(r.re.lo, cut);
                    b.re = QIv(cut, r.re.hi);
                } else {
                    Rat cut = r.im.lo + r.im.width() * f;
                    a.im = QIv(r.im.lo, cut);
                    b.im = QIv(cut, r.im.hi);
                }
                auto ca = count_roots_in_rect(s_, a);
                if (!ca) continue;
                auto cb = count_roots_in_rect(s_, b);
                if (!cb) continue;
                if (*ca + *cb != cnt) throw InternalInvariantError("subdivision lost a root");
                if (*ca > 0) work.push_back({a, *ca});
                if (*cb > 0) work.push_back({b, *cb});
                done = true;
                break;
            }
            if (!done) throw InternalInvariantError("could not split rectangle off the roots");
        }
    }
}

void SquarefreeBoxes::refine(size_t i) {
    BoxC& r = rects_[i];
    if (exact_[i]) {
        const GaussRat& p = points_[i];
        BoxC shrunk(QIv(p.re - r.re.width() / 4, p.re + r.re.width() / 4),
                    QIv(p.im - r.im.width() / 4, p.im + r.im.width() / 4));
        r = shrunk;  // still contains the exact root; no recount needed
        return;
    }
    bool split_x = r.re.width() >= r.im.width();
    static const Rat offsets[] = {Rat(1, 2), Rat(15, 32), Rat(17, 32), Rat(29, 64),
                                  Rat(35, 64), Rat(7, 16), Rat(9, 16)};
    for (const Rat& f : offsets) {
        BoxC a = r, b = r;
        if (split_x) {
            Rat cut = r.re.lo + r.re.width() * f;
            a.re = QIv(r.re.lo, cut);
            b.re = QIv(cut, r.re.hi);
        } else {
            Rat cut = r.im.lo + r.im.width() * f;
            a.im = QIv(r.im.lo, cut);
            b.im = QIv(cut, r.im.hi);
        }
        auto ca = count_roots_in_rect(s_, a);
        if (!ca) continue;
        if (*ca == 1) {
            r = a;
            return;
        }
        auto cb = count_roots_in_rect(s_, b);
        if (!cb) continue;
        if (*cb != 1) throw InternalInvariantError("refine lost the root");
        r = b;
        return;
    }
    throw InternalInvariantError("refine: no valid split found");
}

void SquarefreeBoxes::exclude_zero() {
    if (s_[0] == 0) throw InternalInvariantError("exclude_zero: polynomial has a root at 0");
    for (size_t i = 0; i < rects_.size(); ++i) {
        int guard = 0;
        while (rects_[i].abs2().contains_zero()) {
            refine(i);
            if (++guard > 4096) throw InternalInvariantError("exclude_zero did not terminate");
        }
    }
}

std::string RootBox::describe() const {
    std::ostringstream os;
    os << "disk(center " << center.to_string() << ", radius " << rat_to_string(radius)
       << ", multiplicity " << multiplicity << ")";
    return os.str();
}

namespace {

RootBox make_root_box(const SquarefreeBoxes& sb, size_t i, int layer) {
    RootBox b;
    b.rect = sb.rect(i);
    b.exact = sb.is_exact(i);
    b.center = b.exact ? sb.exact_point(i) : b.rect.center();
    b.radius = (b.rect.re.width() + b.rect.im.width()) / 2;
    b.multiplicity = layer;
    b.layer = layer;
    return b;
}

bool disks_disjoint(const RootBox& a, const RootBox& b) {
    Rat dre = a.center.re - b.center.re;
    Rat dim = a.center.im - b.center.im;
    Rat rs = a.radius + b.radius;
    return dre * dre + dim * dim > rs * rs;
}

}  // namespace

RootIsolator::RootIsolator(const Poly& p) {
    if (p.is_zero()) throw InputError("isolate_roots: zero polynomial");
    for (auto& [e, w] : poly_squarefree_layers(p)) layers_.emplace(e, SquarefreeBoxes(w));
    for (auto& [e, sb] : layers_)
        for (size_t i = 0; i < sb.size(); ++i) {
            origin_.emplace_back(e, i);
            boxes_.push_back(make_root_box(sb, i, e));
        }
    separate();
}

const Poly& RootIsolator::layer_poly(int e) const { return layers_.at(e).poly(); }

void RootIsolator::rebuild(size_t i) {
    auto [e, idx] = origin_[i];
    SquarefreeBoxes& sb = layers_.at(e);
    sb.refine(idx);
    boxes_[i] = make_root_box(sb, idx, e);
}

void RootIsolator::separate() {
    bool again = true;
    int guard = 0;
    while (again) {
        again = false;
        for (size_t i = 0; i < boxes_.size(); ++i)
            for (size_t j = i + 1; j < boxes_.size(); ++j) {
                if (disks_disjoint(boxes_[i], boxes_[j])) continue;
                rebuild(boxes_[i].radius >= boxes_[j].radius ? i : j);
                again = true;
            }
        if (++guard > 65536) throw InternalInvariantError("disk separation did not terminate");
    }
}

void RootIsolator::refine_below(const Rat& eps) {
    if (eps <= 0) throw InputError("refine_below: eps must be positive");
    for (size_t i = 0; i < boxes_.size(); ++i)
        while (boxes_[i].radius >= eps) rebuild(i);
    separate();
}

std::vector<RootBox> isolate_roots(const Poly& p) { return RootIsolator(p).boxes(); }

}  // namespace weilform
