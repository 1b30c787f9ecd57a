#include "weilform/poly.hpp"

#include <sstream>

#include "weilform/errors.hpp"

namespace weilform {

Poly::Poly(Rat constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::from_longs(const std::vector<long>& coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (long x : coeffs) c.emplace_back(x);
    return Poly(std::move(c));
}

Poly Poly::monomial(int k, Rat c) {
    if (c == 0) return Poly();
    std::vector<Rat> v(k + 1, Rat(0));
    v[k] = std::move(c);
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::operator[](int i) const {
    static const Rat zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const Rat& Poly::leading() const {
    if (is_zero()) throw InputError("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-() const {
    std::vector<Rat> r(c_);
    for (auto& x : r) x = -x;
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rat& s) const {
    if (s == 0) return Poly();
    std::vector<Rat> r(c_);
    for (auto& x : r) x *= s;
    return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& o) const {
    if (o.is_zero()) throw InputError("division by zero polynomial");
    if (degree() < o.degree()) return {Poly(), *this};
    std::vector<Rat> rem(c_);
    std::vector<Rat> quo(degree() - o.degree() + 1, Rat(0));
    const Rat& lead = o.c_.back();
    for (int k = degree() - o.degree(); k >= 0; --k) {
        Rat q = rem[k + o.degree()] / lead;
        quo[k] = q;
        if (q == 0) continue;
        for (int j = 0; j <= o.degree(); ++j) rem[k + j] -= q * o.c_[j];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::divexact(const Poly& o) const {
    auto [q, r] = divmod(o);
    if (!r.is_zero()) throw InternalInvariantError("divexact: remainder nonzero");
    return q;
}

bool Poly::divides(const Poly& p) const {
    if (is_zero()) return p.is_zero();
    return p.divmod(*this).second.is_zero();
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(r));
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw InputError("negative polynomial power");
    Poly acc(Rat(1)), b = *this;
    while (e) {
        if (e & 1) acc = acc * b;
        if (e >>= 1) b = b * b;
    }
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * Rat(1 / c_.back());
}

Poly Poly::scale_arg(const Rat& c) const {
    std::vector<Rat> r(c_);
    Rat p(1);
    for (size_t i = 1; i < r.size(); ++i) {
        p *= c;
        r[i] *= p;
    }
    return Poly(std::move(r));
}

Poly Poly::reversed() const {
    std::vector<Rat> r(c_.rbegin(), c_.rend());
    return Poly(std::move(r));
}

bool Poly::is_integer() const {
    for (const auto& x : c_)
        if (x.get_den() != 1) return false;
    return true;
}

Poly Poly::primitive_z() const {
    if (is_zero()) return *this;
    Int den(1);
    for (const auto& x : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    Int content(0);
    for (const auto& x : c_) {
        Int num = x.get_num() * (den / x.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    Rat scale = Rat(den) / Rat(content);
    Poly r = *this * scale;
    if (r.leading() < 0) r = -r;
    return r;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Rat mag = rat_abs(a);
        if (i == 0 || mag != 1) os << rat_to_string(mag);
        if (i >= 1) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

// gcd of integer polynomials by the primitive PRS; adequate at desk scale.
Poly gcd_primitive(Poly a, Poly b) {
    while (!b.is_zero()) {
        // pseudo-remainder keeps everything integral
        Poly r = a;
        Rat lead = b.leading();
        int shift = a.degree() - b.degree();
        if (shift >= 0) {
            Rat scale = rat_pow(lead, shift + 1);
            r = (a * scale).divmod(b).second;
        } else {
            r = a;
        }
        a = b;
        b = r.is_zero() ? Poly() : r.primitive_z();
    }
    return a;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    Poly g = gcd_primitive(a.primitive_z(), b.primitive_z());
    return g.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    return (a * b).divexact(poly_gcd(a, b)).monic();
}

std::map<int, Poly> poly_squarefree_layers(const Poly& p) {
    if (p.is_zero()) throw InputError("squarefree layers of zero polynomial");
    std::map<int, Poly> layers;
    if (p.degree() == 0) return layers;
    // Yun's algorithm over Q (characteristic 0)
    Poly g = poly_gcd(p, p.derivative());
    Poly b = p.divexact(g).monic();
    Poly c = p.derivative().divexact(g) * Rat(1 / p.leading());
    Poly d = c - b.derivative();
    int e = 1;
    while (b.degree() > 0) {
        Poly a = poly_gcd(b, d);
        if (a.degree() > 0) layers[e] = a;
        b = b.divexact(a).monic();
        c = d.divexact(a);
        d = c - b.derivative();
        ++e;
    }
    return layers;
}

int factor_multiplicity(const Poly& p, const Poly& d) {
    if (d.degree() < 1) throw InputError("factor_multiplicity: divisor must be nonconstant");
    if (p.is_zero()) throw InputError("factor_multiplicity: zero polynomial");
    int k = 0;
    Poly cur = p;
    while (true) {
        auto [q, r] = cur.divmod(d);
        if (!r.is_zero()) return k;
        cur = std::move(q);
        ++k;
    }
}

namespace {

// Inserts x into a pairwise-coprime monic basis, refining existing entries.
void coprime_insert(std::vector<Poly>& basis, Poly x) {
    x = x.monic();
    if (x.degree() <= 0) return;
    for (size_t i = 0; i < basis.size(); ++i) {
        Poly g = poly_gcd(x, basis[i]);
        if (g.degree() == 0) continue;
        if (g != basis[i]) {
            Poly b = basis[i];
            basis.erase(basis.begin() + static_cast<long>(i));
            coprime_insert(basis, b.divexact(g));
            coprime_insert(basis, g);
        }
        while (g.divides(x)) x = x.divexact(g).monic();
        coprime_insert(basis, x);
        return;
    }
    basis.push_back(x);
}

}  // namespace

GcdFreeBasis gcd_free_basis(const std::vector<Poly>& inputs) {
    std::vector<Poly> basis;
    for (const auto& p : inputs) {
        if (p.is_zero()) throw InputError("gcd_free_basis: zero polynomial");
        coprime_insert(basis, p);
    }
    GcdFreeBasis out;
    out.basis = basis;
    for (const auto& p : inputs) {
        std::vector<int> exps(basis.size(), 0);
        Poly rest = p.monic();
        for (size_t i = 0; i < basis.size(); ++i) {
            while (basis[i].degree() > 0 && basis[i].divides(rest)) {
                rest = rest.divexact(basis[i]).monic();
                exps[i]++;
            }
        }
        if (rest.degree() != 0)
            throw InternalInvariantError("gcd_free_basis: incomplete factor split");
        out.exponents.push_back(std::move(exps));
    }
    return out;
}

}  // namespace weilform
