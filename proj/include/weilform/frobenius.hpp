#ifndef WEILFORM_FROBENIUS_HPP
#define WEILFORM_FROBENIUS_HPP

#include <optional>

#include "weilform/linalg.hpp"
#include "weilform/weil.hpp"

namespace weilform {

// A Frobenius module at a point: an invertible rational matrix F with base
// size q (a prime power) and an optional declared weight.  When a weight is
// declared, purity of det(1 - TF) at that weight is certified on
// construction.
class FrobeniusModule {
  public:
    FrobeniusModule(Mat frobenius, Int q, std::optional<long> declared_weight = std::nullopt);

    const Mat& frobenius() const { return f_; }
    const Int& q() const { return q_; }
    std::optional<long> declared_weight() const { return w_; }
    int dimension() const { return f_.rows(); }

    static int dimension_cap;  // default 64

  private:
    Mat f_;
    Int q_;
    std::optional<long> w_;
};

bool is_prime_power(const Int& q);

// det(1 - T F): constant term 1, degree = dimension.
Poly char_poly(const FrobeniusModule& m);

// Monic invariant factors f_1 | f_2 | ... | f_r with product det(T I - F).
std::vector<Poly> invariant_factors(const FrobeniusModule& m);

// Layer polynomials D_e (monic, in the T - lambda convention): the
// multiplicity of lambda as a root of D_e equals the number of e x e Jordan
// blocks of eigenvalue lambda.
struct JordanProfile {
    std::map<int, Poly> layers;
    int dimension() const;
    bool operator==(const JordanProfile& o) const { return layers == o.layers; }
};

JordanProfile jordan_profile(const FrobeniusModule& m);

// A module realizing a given profile: block companion matrices, one cyclic
// block per squarefree piece and multiplicity.
FrobeniusModule module_from_profile(const JordanProfile& profile, const Int& q,
                                    std::optional<long> declared_weight = std::nullopt);

// Flatten all Jordan layers to e = 1 with multiplicity e * mu.
JordanProfile semisimplify(const JordanProfile& profile);

// Partition of char_poly by exact integral weights (throws
// NonIntegralWeightError as in weight_split_poly).
std::map<long, Poly> weight_split(const FrobeniusModule& m);

}  // namespace weilform

#endif
