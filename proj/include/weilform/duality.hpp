#ifndef WEILFORM_DUALITY_HPP
#define WEILFORM_DUALITY_HPP

#include "weilform/frobenius.hpp"

namespace weilform {

// One parity violation at a special eigenvalue: mu_{lambda,e} odd where the
// criterion demands even.
struct Violation {
    std::string eigenvalue;  // "+q^{w/2}", "-q^{w/2}" or "+-sqrt(q^w)"
    int e = 0;
    std::string parity;  // which rule was violated
};

struct DualityVerdict {
    bool self_dual = false;
    bool plus_self_dual = false;
    bool minus_self_dual = false;
    std::optional<Mat> witness;  // nondegenerate invariant pairing, when one exists
    int witness_sign = 0;        // +1 symmetric, -1 alternating
    std::vector<Violation> refusal_reasons;
};

// Basis of {B : F^T B F = q^w B, B^T = sigma B}; sigma = 0 drops the
// symmetry constraint.
std::vector<Mat> invariant_pairing_space(const FrobeniusModule& m, long w, int sigma);

// Deterministic search for an invertible combination: the determinant is a
// polynomial of degree <= d in the coefficients, so a full sweep over
// {0..d}^k decides existence.  Cheap certificates (common radical, odd
// skew dimension) short-circuit the sweep.
std::optional<Mat> find_nondegenerate(const std::vector<Mat>& basis);

// Trichotomy data for a pure module, by the Jordan-multiplicity criterion
// and independently by invariant-pairing witness search; the routes must
// agree or an InternalInvariantError is thrown.
DualityVerdict classify_self_duality(const FrobeniusModule& m, long w);

// Verdict for the complement of `part` inside `whole` (layerwise division);
// both inputs must be sigma-self-dual at weight w, and the complement is
// asserted to be sigma-self-dual as well.
DualityVerdict two_out_of_three(const FrobeniusModule& whole, const FrobeniusModule& part, long w,
                                int sigma);

// Special-eigenvalue divisors at weight w in the monic (T - lambda)
// convention, with printable descriptors.
std::vector<std::pair<Poly, std::string>> special_divisors_monic(const Int& q, long w);
// Same in the det(1 - TF) convention (constant term 1).
std::vector<std::pair<Poly, std::string>> special_divisors_weil(const Int& q, long w);

}  // namespace weilform

#endif
