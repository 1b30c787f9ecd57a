#ifndef WEILFORM_CYCLOTOMIC_HPP
#define WEILFORM_CYCLOTOMIC_HPP

#include <vector>

#include "weilform/poly.hpp"

namespace weilform {

// Exact element of Q(zeta_n), coordinates in the power basis
// 1, zeta, ..., zeta^{phi(n)-1}, reduced modulo the n-th cyclotomic
// polynomial.  Mixed conductors are lifted to the lcm on the fly.
class Cyc {
  public:
    Cyc() : n_(1), c_{Rat(0)} {}
    Cyc(int v) : n_(1), c_{Rat(v)} {}  // NOLINT: field scalars convert implicitly
    Cyc(const Rat& v) : n_(1), c_{v} {}
    Cyc(int conductor, std::vector<Rat> coords);

    static Cyc zeta(int conductor, long power = 1);
    static int conductor_cap;  // default 512

    int conductor() const { return n_; }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // throws if not rational

    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator-() const;
    Cyc operator*(const Cyc& o) const;
    Cyc operator/(const Cyc& o) const;
    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    Cyc lifted(int conductor) const;
    int n_;
    std::vector<Rat> c_;  // length phi(n_)
};

// n-th cyclotomic polynomial (cached).
const Poly& cyclotomic_polynomial(int n);
int euler_phi(int n);

}  // namespace weilform

#endif
