#ifndef WEILFORM_KRING_HPP
#define WEILFORM_KRING_HPP

#include "weilform/frobenius.hpp"

namespace weilform {

// One weight-graded component of a virtual class: a reduced rational
// function num/den with both constant terms 1, representing
// prod (1 - lambda T)^{m_lambda} with m_lambda in Z and every lambda of
// weight exactly w.
struct WeightComponent {
    Poly num{Rat(1)};
    Poly den{Rat(1)};
    bool operator==(const WeightComponent& o) const { return num == o.num && den == o.den; }
    int rank() const { return num.degree() - den.degree(); }
};

class VirtualWeilClass {
  public:
    explicit VirtualWeilClass(Int q);
    // validates purity of both parts at weight w
    VirtualWeilClass& set_component(long w, Poly num, Poly den, bool validate = true);

    static VirtualWeilClass unit(Int q);  // (1 - T) at weight 0
    static VirtualWeilClass from_module(const FrobeniusModule& m);

    const Int& q() const { return q_; }
    const std::map<long, WeightComponent>& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }
    int rank() const;
    bool operator==(const VirtualWeilClass& o) const { return q_ == o.q_ && comps_ == o.comps_; }

  private:
    friend VirtualWeilClass kr_add(const VirtualWeilClass&, const VirtualWeilClass&);
    Int q_;
    std::map<long, WeightComponent> comps_;
};

VirtualWeilClass kr_add(const VirtualWeilClass& x, const VirtualWeilClass& y);
VirtualWeilClass kr_neg(const VirtualWeilClass& x);
VirtualWeilClass kr_tensor(const VirtualWeilClass& x, const VirtualWeilClass& y);
// Adams operation psi^k: trace sequence reindexed s_n -> s_{kn}, weights scaled by k.
VirtualWeilClass kr_adams(const VirtualWeilClass& x, int k);
// lambda^m via Newton's identity m lambda^m = sum (-1)^{j-1} psi^j tensor lambda^{m-j}.
VirtualWeilClass kr_lambda(const VirtualWeilClass& x, int m);
VirtualWeilClass kr_dual(const VirtualWeilClass& x);
VirtualWeilClass kr_tate(const VirtualWeilClass& x, long n);
VirtualWeilClass kr_dbar(const VirtualWeilClass& x);

// Membership in K_{iota,sigma}: the component at weight w must be generated
// by (-1)^w sigma-self-dual pure classes.  Both the multiplicity route and
// the rank/determinant route are evaluated and must agree.
struct WeightMembership {
    bool symmetric = false;   // m_lambda = m_{q^w/lambda}
    bool even_ok = true;      // multiplicities at +-q^{w/2} even (when required)
    bool member = false;
    std::string detail;
};
struct MembershipReport {
    int sigma = 0;
    bool member = false;
    std::map<long, WeightMembership> per_weight;
};
MembershipReport kr_membership(const VirtualWeilClass& x, int sigma);

// Trace (Adams) sequence s_1..s_L of a component.
std::vector<Rat> component_power_sums(const WeightComponent& c, int length);

}  // namespace weilform

#endif
