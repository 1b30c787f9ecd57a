#include <doctest.h>

#include "weilform/cyclotomic.hpp"
#include "weilform/errors.hpp"

using namespace weilform;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == Poly::from_longs({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == Poly::from_longs({1, 1}));
    CHECK(cyclotomic_polynomial(4) == Poly::from_longs({1, 0, 1}));
    CHECK(cyclotomic_polynomial(12) == Poly::from_longs({1, 0, -1, 0, 1}));
    for (int n : {1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 16, 24})
        CHECK(cyclotomic_polynomial(n).degree() == euler_phi(n));
}

TEST_CASE("cyclotomic arithmetic") {
    Cyc i = Cyc::zeta(4);
    CHECK(i * i == Cyc(-1));
    CHECK((i * i * i * i) == Cyc(1));
    Cyc w = Cyc::zeta(3);
    CHECK(w * w + w + Cyc(1) == Cyc(0));
    // inverse
    Cyc x = w + Cyc(2);
    CHECK(x / x == Cyc(1));
    CHECK((Cyc(1) / w) * w == Cyc(1));
    CHECK_THROWS_AS(x / Cyc(0), InputError);
    // mixed conductors lift to the lcm
    Cyc z12 = Cyc::zeta(12);
    CHECK(z12 * z12 * z12 == i);
    CHECK(z12.conductor() == 12);
    CHECK((w * i).conductor() == 12);
    // rationality detection
    CHECK((w + w * w).is_rational());
    CHECK((w + w * w).rational_value() == Rat(-1));
    CHECK(!w.is_rational());
    CHECK_THROWS_AS(w.rational_value(), InputError);
}

TEST_CASE("conductor cap") {
    CHECK_THROWS_AS(Cyc::zeta(1024), InputError);
}
