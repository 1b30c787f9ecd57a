#include "weilform/rational.hpp"

namespace weilform {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw InputError("bad rational literal: " + s);
    }
    Rat r;
    if (r.set_str(s, 10) != 0) throw InputError("bad rational literal: " + s);
    if (r.get_den() == 0) throw InputError("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw InputError("0 to a negative power");
        return Rat(0);
    }
    Rat b = e > 0 ? base : Rat(1 / base);
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

Int int_isqrt(const Int& n) {
    if (n < 0) throw InputError("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Rat> exact_sqrt_qw(const Int& q, long w) {
    // q^{w/2} is rational iff q^|w| is a perfect square.
    Int qw;
    mpz_pow_ui(qw.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(w >= 0 ? w : -w));
    Int s = int_isqrt(qw);
    if (s * s != qw) return std::nullopt;
    Rat r(s);
    if (w < 0) r = 1 / r;
    return r;
}

}  // namespace weilform
