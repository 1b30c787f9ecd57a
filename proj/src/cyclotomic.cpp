#include "weilform/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "weilform/errors.hpp"

namespace weilform {

int Cyc::conductor_cap = 512;

int euler_phi(int n) {
    if (n <= 0) throw InputError("euler_phi: n must be positive");
    int result = n, m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

const Poly& cyclotomic_cached(int n) {
    static std::map<int, Poly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // (T^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Rat> xn(static_cast<size_t>(n) + 1, Rat(0));
    xn[0] = -1;
    xn[static_cast<size_t>(n)] = 1;
    Poly p(std::move(xn));
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = p.divexact(cyclotomic_cached(d));
    return cache.emplace(n, std::move(p)).first->second;
}

}  // namespace

const Poly& cyclotomic_polynomial(int n) {
    if (n <= 0) throw InputError("cyclotomic_polynomial: n must be positive");
    // the cache is the library's only shared state; serialize access
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    return cyclotomic_cached(n);
}

Cyc::Cyc(int conductor, std::vector<Rat> coords) : n_(conductor), c_(std::move(coords)) {
    if (conductor <= 0) throw InputError("Cyc: conductor must be positive");
    if (conductor > conductor_cap)
        throw InputError("Cyc: conductor exceeds cap " + std::to_string(conductor_cap));
    size_t deg = static_cast<size_t>(euler_phi(n_));
    if (c_.size() > deg) {
        // reduce modulo Phi_n
        Poly rem = Poly(std::vector<Rat>(c_)).divmod(cyclotomic_polynomial(n_)).second;
        c_.assign(deg, Rat(0));
        for (int i = 0; i <= rem.degree(); ++i) c_[static_cast<size_t>(i)] = rem[i];
    } else {
        c_.resize(deg, Rat(0));
    }
}

Cyc Cyc::zeta(int conductor, long power) {
    long m = power % conductor;
    if (m < 0) m += conductor;
    std::vector<Rat> c(static_cast<size_t>(m) + 1, Rat(0));
    c[static_cast<size_t>(m)] = 1;
    return Cyc(conductor, std::move(c));
}

bool Cyc::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyc::rational_value() const {
    if (!is_rational()) throw InputError("Cyc: value is not rational: " + to_string());
    return c_.empty() ? Rat(0) : c_[0];
}

Cyc Cyc::lifted(int conductor) const {
    if (conductor == n_) return *this;
    if (conductor % n_ != 0) throw InternalInvariantError("Cyc::lifted: conductor not a multiple");
    // zeta_{n} = zeta_{conductor}^{conductor/n}
    long step = conductor / n_;
    Poly acc;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        acc = acc + Poly::monomial(static_cast<int>(i * static_cast<size_t>(step)), c_[i]);
    }
    std::vector<Rat> coords(acc.coeffs());
    return Cyc(conductor, std::move(coords));
}

namespace {
int common_conductor(int a, int b) { return std::lcm(a, b); }
}  // namespace

Cyc Cyc::operator+(const Cyc& o) const {
    int n = common_conductor(n_, o.n_);
    Cyc x = lifted(n), y = o.lifted(n);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

Cyc Cyc::operator-(const Cyc& o) const {
    int n = common_conductor(n_, o.n_);
    Cyc x = lifted(n), y = o.lifted(n);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
}

Cyc Cyc::operator-() const {
    Cyc x = *this;
    for (auto& v : x.c_) v = -v;
    return x;
}

Cyc Cyc::operator*(const Cyc& o) const {
    int n = common_conductor(n_, o.n_);
    Cyc x = lifted(n), y = o.lifted(n);
    Poly prod = Poly(std::vector<Rat>(x.c_)) * Poly(std::vector<Rat>(y.c_));
    return Cyc(n, std::vector<Rat>(prod.coeffs()));
}

Cyc Cyc::operator/(const Cyc& o) const {
    if (o.is_zero()) throw InputError("Cyc: division by zero");
    int n = common_conductor(n_, o.n_);
    Cyc x = lifted(n), y = o.lifted(n);
    // invert y modulo Phi_n by the extended Euclidean algorithm
    const Poly& modulus = cyclotomic_polynomial(n);
    Poly r0 = modulus, r1 = Poly(std::vector<Rat>(y.c_));
    Poly s0, s1(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        Poly s2 = s0 - q * s1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    if (r0.degree() != 0) throw InternalInvariantError("cyclotomic polynomial not coprime to element");
    Poly inv = s0 * (1 / r0[0]);
    Poly prod = Poly(std::vector<Rat>(x.c_)) * inv;
    return Cyc(n, std::vector<Rat>(prod.coeffs()));
}

bool Cyc::operator==(const Cyc& o) const {
    int n = common_conductor(n_, o.n_);
    return lifted(n).c_ == o.lifted(n).c_;
}

std::string Cyc::to_string() const {
    if (is_rational()) return rat_to_string(c_.empty() ? Rat(0) : c_[0]);
    std::ostringstream os;
    os << Poly(std::vector<Rat>(c_)).to_string("z") << " (conductor " << n_ << ")";
    return os.str();
}

}  // namespace weilform
