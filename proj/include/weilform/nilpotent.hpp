#ifndef WEILFORM_NILPOTENT_HPP
#define WEILFORM_NILPOTENT_HPP

#include <optional>

#include "weilform/linalg.hpp"

namespace weilform {

// A nilpotent operator N, optionally equipped with an invertible pairing A
// satisfying A^T = sign * A and A N = -N^T A; both identities are verified
// exactly on construction.
class NilpotentDatum {
  public:
    explicit NilpotentDatum(Mat n);
    NilpotentDatum(Mat n, Mat pairing, int sign);

    const Mat& n() const { return n_; }
    bool has_pairing() const { return pairing_.has_value(); }
    const Mat& pairing() const;
    int sign() const { return sign_; }
    int dimension() const { return n_.rows(); }
    // largest d with N^d != 0 (so N^{d+1} = 0); -1 for the zero space
    int nilpotency_degree() const { return d_; }

  private:
    Mat n_;
    std::optional<Mat> pairing_;
    int sign_ = 0;
    int d_ = 0;
};

// The unique increasing filtration with N M_j <= M_{j-2} and
// N^k : gr_k ~ gr_{-k}; indices run over [-d-1, d].
struct MonodromyFiltration {
    int d = 0;
    std::map<int, Subspace> m;          // filtration steps
    std::map<int, int> graded_dim;      // dim gr_j for j in [-d, d]
    std::map<int, int> primitive_dim;   // p_i for i in [-d, 0]

    const Subspace& step(int j) const;  // clamps outside the index range
};

MonodromyFiltration monodromy_filtration(const NilpotentDatum& n);

// Representatives in M_i of Ker(N : gr_i -> gr_{i-2}), for each i <= 0.
std::map<int, std::vector<std::vector<Rat>>> primitive_parts(const NilpotentDatum& n);

// Witness pairing for N(m_1..m_l) from the explicit antidiagonal blocks,
// or the list of block sizes violating the parity condition.
struct LaWitness {
    Mat n;                        // the assembled nilpotent
    std::optional<Mat> pairing;   // present iff the parity condition holds
    std::vector<int> violations;  // block sizes n with m_n odd at the wrong parity
};
LaWitness la_witness(const std::vector<int>& multiplicities, int sign);

// Gram matrix of the induced form on the primitive part P_i and its
// verified symmetry sign (-1)^{|i|} * sign(A).
struct PrimitiveGram {
    Mat gram;
    int i = 0;
    int expected_sign = 0;
    bool invertible = false;
};
PrimitiveGram induced_primitive_gram(const NilpotentDatum& n, int i);

}  // namespace weilform

#endif
