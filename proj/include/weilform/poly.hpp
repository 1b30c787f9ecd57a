#ifndef WEILFORM_POLY_HPP
#define WEILFORM_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "weilform/rational.hpp"

namespace weilform {

// Dense univariate polynomial over Q.  Coefficients ascending, constant
// term first; the highest stored coefficient is nonzero (zero polynomial
// stores nothing).
class Poly {
  public:
    Poly() = default;
    explicit Poly(Rat constant);
    explicit Poly(std::vector<Rat> coeffs);
    static Poly from_longs(const std::vector<long>& coeffs);

    // x^k with coefficient c
    static Poly monomial(int k, Rat c = Rat(1));

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& operator[](int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    // Euclidean division over Q; o must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& o) const;
    // exact division; throws InternalInvariantError if the remainder is nonzero
    Poly divexact(const Poly& o) const;
    bool divides(const Poly& p) const;

    Poly derivative() const;
    Rat eval(const Rat& x) const;
    Poly pow(int e) const;

    Poly monic() const;
    // p(c*x)
    Poly scale_arg(const Rat& c) const;
    // x^deg * p(1/x)
    Poly reversed() const;

    bool is_integer() const;
    // content and primitive part over Z (defined for integer-scaled use);
    // primitive_z clears denominators first.
    Poly primitive_z() const;

    std::string to_string(const std::string& var = "T") const;

  private:
    void trim();
    std::vector<Rat> c_;
};

Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_lcm(const Poly& a, const Poly& b);

// Yun decomposition: squarefree pairwise-coprime monic w_e with
// p = lc * prod w_e^e; only nonconstant layers are returned.
std::map<int, Poly> poly_squarefree_layers(const Poly& p);

// Largest k with d^k | p exactly (d nonconstant).
int factor_multiplicity(const Poly& p, const Poly& d);

// Pairwise-coprime monic basis c_1..c_s such that every input is, up to a
// constant, a product of powers of the c_i.  Exponents of input j are
// returned in exps[j] (aligned with the basis).
struct GcdFreeBasis {
    std::vector<Poly> basis;
    std::vector<std::vector<int>> exponents;
};
GcdFreeBasis gcd_free_basis(const std::vector<Poly>& inputs);

}  // namespace weilform

#endif
