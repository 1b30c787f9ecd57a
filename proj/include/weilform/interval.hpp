#ifndef WEILFORM_INTERVAL_HPP
#define WEILFORM_INTERVAL_HPP

#include <string>

#include "weilform/rational.hpp"

namespace weilform {

struct GaussRat {
    Rat re, im;
    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    std::string to_string() const;
};

// Closed rational interval [lo, hi].
struct QIv {
    Rat lo, hi;
    QIv() : lo(0), hi(0) {}
    QIv(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw InternalInvariantError("interval bounds out of order");
    }
    static QIv point(const Rat& x) { return QIv(x, x); }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return contains(Rat(0)); }
    bool intersects(const QIv& o) const { return !(hi < o.lo || o.hi < lo); }

    QIv operator+(const QIv& o) const { return QIv(lo + o.lo, hi + o.hi); }
    QIv operator-(const QIv& o) const { return QIv(lo - o.hi, hi - o.lo); }
    QIv operator-() const { return QIv(-hi, -lo); }
    QIv operator*(const QIv& o) const;
    QIv operator*(const Rat& s) const;
    QIv square() const;
    // requires 0 strictly outside the divisor
    QIv operator/(const QIv& o) const;
};

// Axis-aligned rectangle in C.
struct BoxC {
    QIv re, im;
    BoxC() = default;
    BoxC(QIv r, QIv i) : re(std::move(r)), im(std::move(i)) {}
    static BoxC point(const GaussRat& z) { return BoxC(QIv::point(z.re), QIv::point(z.im)); }

    GaussRat center() const { return GaussRat{re.mid(), im.mid()}; }
    bool contains(const GaussRat& z) const { return re.contains(z.re) && im.contains(z.im); }
    bool intersects(const BoxC& o) const { return re.intersects(o.re) && im.intersects(o.im); }

    BoxC operator+(const BoxC& o) const { return BoxC(re + o.re, im + o.im); }
    BoxC operator*(const BoxC& o) const {
        return BoxC(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    BoxC conj() const { return BoxC(re, -im); }
    QIv abs2() const { return re.square() + im.square(); }
    // 1/z; requires 0 outside the box
    BoxC recip() const;
};

}  // namespace weilform

#endif
