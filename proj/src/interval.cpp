#include "weilform/interval.hpp"

#include <algorithm>

namespace weilform {

std::string GaussRat::to_string() const {
    if (im == 0) return rat_to_string(re);
    std::string s = rat_to_string(re);
    s += (im > 0 ? " + " : " - ") + rat_to_string(rat_abs(im)) + "i";
    return s;
}

QIv QIv::operator*(const QIv& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return QIv(std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d)));
}

QIv QIv::operator*(const Rat& s) const {
    if (s >= 0) return QIv(lo * s, hi * s);
    return QIv(hi * s, lo * s);
}

QIv QIv::square() const {
    if (lo >= 0) return QIv(lo * lo, hi * hi);
    if (hi <= 0) return QIv(hi * hi, lo * lo);
    return QIv(Rat(0), std::max(lo * lo, hi * hi));
}

QIv QIv::operator/(const QIv& o) const {
    if (o.contains_zero()) throw InternalInvariantError("interval division by interval containing 0");
    QIv inv(1 / o.hi, 1 / o.lo);
    return *this * inv;
}

BoxC BoxC::recip() const {
    QIv a2 = abs2();
    if (a2.contains_zero()) throw InternalInvariantError("complex interval reciprocal through 0");
    return BoxC(re / a2, (-im) / a2);
}

}  // namespace weilform
