#ifndef WEILFORM_WEIL_HPP
#define WEILFORM_WEIL_HPP

#include <map>

#include "weilform/roots.hpp"

namespace weilform {

// Purity certificate for det(1 - T F)-normalized polynomials: pure means
// integer coefficients and every inverse root of modulus exactly q^{w/2}
// under every embedding.  Offending boxes isolate inverse roots that are
// certified off the circle.
struct WeilCertificate {
    bool pure = false;
    bool integral = false;
    std::vector<RootBox> offending;
};

// p(0) must be 1.
WeilCertificate is_weil_poly(const Poly& p, const Int& q, long w);

// For p with p(0) = 1 and inverse roots L, the polynomial with inverse
// roots {q^w / l : l in L}:  p†(T) = (q^w)^b T^b p(1/(q^w T)) / lc(p).
Poly weight_dual_poly(const Poly& p, const Int& q, long w);

// Same transform in the monic convention: for monic s with roots L and
// s(0) != 0, the monic polynomial with roots {q^w / l}.
Poly weight_dual_monic(const Poly& s, const Int& q, long w);

// The monic integer factor of squarefree integer s whose roots satisfy
// |z|^2 = q^w exactly (empty product = 1).  Throws NonIntegralWeightError
// when the on-circle root set is provably not Galois stable (such roots are
// not q-Weil integers).
Poly on_circle_factor(const Poly& s, const Int& q, long w);

// Partition of the inverse roots of p (integer coefficients, p(0) = 1) by
// exact weight; the returned factors multiply back to p.
std::map<long, Poly> weight_split_poly(const Poly& p, const Int& q);

}  // namespace weilform

#endif
