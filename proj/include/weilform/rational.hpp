#ifndef WEILFORM_RATIONAL_HPP
#define WEILFORM_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "weilform/errors.hpp"

namespace weilform {

// Exact arithmetic substrate.  Rat is always canonical: gcd(num, den) = 1
// and den > 0 (gmp keeps this under canonicalize, and all arithmetic
// operators preserve it).
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q".  Used by all JSON readers.
Rat rat_from_string(const std::string& s);

std::string rat_to_string(const Rat& r);

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline Rat rat_abs(const Rat& r) { return r >= 0 ? r : Rat(-r); }

// floor(num/den) as an integer
Int rat_floor(const Rat& r);

// q^e for e possibly negative
Rat rat_pow(const Rat& base, long e);

// Largest s with s*s <= n (n >= 0).
Int int_isqrt(const Int& n);

// If q^w is a perfect square, returns q^{w/2} as an exact integer-or-half
// power; otherwise nullopt.  q >= 2, w any integer.  The returned value is
// rational and positive (q^{w/2} = r means r*r = q^w).
std::optional<Rat> exact_sqrt_qw(const Int& q, long w);

}  // namespace weilform

#endif
