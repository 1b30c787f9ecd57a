#include <doctest.h>

#include <random>

#include "weilform/weil.hpp"

using namespace weilform;

namespace {

Poly linear(long c0, long c1) { return Poly::from_longs({c0, c1}); }

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(rat_from_string("3/6") == Rat(1, 2));
    CHECK(rat_from_string("-7") == Rat(-7));
    CHECK(rat_to_string(Rat(-3, 4)) == "-3/4");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK_THROWS_AS(rat_from_string("1/0"), InputError);
    CHECK_THROWS_AS(rat_from_string("x"), InputError);
    CHECK(*exact_sqrt_qw(Int(9), 1) == 3);
    CHECK(*exact_sqrt_qw(Int(5), 2) == 5);
    CHECK(!exact_sqrt_qw(Int(5), 1));
    CHECK(*exact_sqrt_qw(Int(4), -1) == Rat(1, 2));
}

TEST_CASE("polynomial arithmetic") {
    Poly p = linear(-1, 1);  // T - 1
    CHECK((p * p).to_string() == "1 - 2*T + T^2");
    CHECK(p.pow(3)[2] == -3);
    auto [q, r] = (p * p * linear(2, 1)).divmod(p);
    CHECK(r.is_zero());
    CHECK(q == p * linear(2, 1));
    CHECK(poly_gcd(p * p, p * linear(-2, 1)) == p);
    CHECK(p.eval(Rat(3)) == 2);
    CHECK(linear(1, -2).reversed() == linear(-2, 1));
}

TEST_CASE("squarefree layers: worked examples") {
    // (T-1)^2 -> {2: T-1}
    auto layers = poly_squarefree_layers(linear(-1, 1).pow(2));
    REQUIRE(layers.size() == 1);
    CHECK(layers[2] == linear(-1, 1));
    // (T-1)(T-2)^2 -> {1: T-1, 2: T-2}
    layers = poly_squarefree_layers(linear(-1, 1) * linear(-2, 1).pow(2));
    REQUIRE(layers.size() == 2);
    CHECK(layers[1] == linear(-1, 1));
    CHECK(layers[2] == linear(-2, 1));
    // T^3 - 3T^2 + 3T - 1 = (T-1)^3
    layers = poly_squarefree_layers(Poly::from_longs({-1, 3, -3, 1}));
    REQUIRE(layers.size() == 1);
    CHECK(layers[3] == linear(-1, 1));
    CHECK_THROWS_AS(poly_squarefree_layers(Poly()), InputError);
}

TEST_CASE("squarefree layers reassemble random products") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long> root(-4, 4);
    std::uniform_int_distribution<int> mult(1, 3);
    for (int trial = 0; trial < 40; ++trial) {
        Poly p(Rat(1));
        for (int i = 0; i < 4; ++i) {
            long r = root(rng);
            p = p * linear(-r, 2).pow(mult(rng));  // (2T - r)^m, roots r/2
        }
        auto layers = poly_squarefree_layers(p);
        Poly back(p.leading());
        for (auto& [e, w] : layers) back = back * w.pow(e);
        CHECK(back == p);
        for (auto& [e, w] : layers) CHECK(poly_gcd(w, w.derivative()).degree() == 0);
    }
}

TEST_CASE("factor multiplicity: worked examples and additivity") {
    Poly d1 = Poly::from_longs({1, 0, -5});  // 1 - 5T^2
    CHECK(factor_multiplicity(d1 * d1, d1) == 2);
    CHECK(factor_multiplicity(linear(1, -1), linear(1, 1)) == 0);
    CHECK(factor_multiplicity(linear(1, -2).pow(3) * linear(1, -3), linear(1, -2)) == 3);
    CHECK_THROWS_AS(factor_multiplicity(d1, Poly(Rat(2))), InputError);

    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        Poly p = Poly::from_longs({coef(rng), coef(rng), 1});
        Poly d = Poly::from_longs({coef(rng), 1});
        int k = trial % 5;
        CHECK(factor_multiplicity(p * d.pow(k), d) == factor_multiplicity(p, d) + k);
    }
}

TEST_CASE("root isolation: worked examples") {
    // 1 - T: one box around 1
    auto boxes = isolate_roots(linear(1, -1));
    REQUIRE(boxes.size() == 1);
    CHECK(boxes[0].multiplicity == 1);
    CHECK(boxes[0].rect.contains(GaussRat{Rat(1), Rat(0)}));
    // 1 - 5T^2: boxes around +-1/sqrt(5)
    boxes = isolate_roots(Poly::from_longs({1, 0, -5}));
    REQUIRE(boxes.size() == 2);
    for (auto& b : boxes) CHECK(b.multiplicity == 1);
    // 1 - T + 5T^2: conjugate pair with |root|^2 = 1/5
    boxes = isolate_roots(Poly::from_longs({1, -1, 5}));
    REQUIRE(boxes.size() == 2);
    for (auto& b : boxes) {
        QIv a2 = b.abs2();
        CHECK(a2.contains(Rat(1, 5)));
    }
    CHECK_THROWS_AS(isolate_roots(Poly()), InputError);
}

TEST_CASE("root isolation: multiplicities sum to degree and refinement is stable") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Rat> c;
        for (int i = 0; i < 5; ++i) c.emplace_back(coef(rng));
        c.emplace_back(1);
        Poly p{std::move(c)};
        Poly sq = p * linear(coef(rng), 1).pow(2);
        RootIsolator iso(sq);
        int total = 0;
        for (auto& b : iso.boxes()) total += b.multiplicity;
        CHECK(total == sq.degree());
        std::vector<int> mults;
        for (auto& b : iso.boxes()) mults.push_back(b.multiplicity);
        iso.refine_below(Rat(1, 64));
        std::vector<int> mults2;
        for (auto& b : iso.boxes()) {
            mults2.push_back(b.multiplicity);
            CHECK(b.radius < Rat(1, 64));
        }
        CHECK(mults == mults2);
        // disks pairwise disjoint
        for (size_t i = 0; i < iso.boxes().size(); ++i)
            for (size_t j = i + 1; j < iso.boxes().size(); ++j) {
                const auto &a = iso.boxes()[i], &b = iso.boxes()[j];
                Rat dre = a.center.re - b.center.re, dim = a.center.im - b.center.im;
                CHECK(dre * dre + dim * dim > (a.radius + b.radius) * (a.radius + b.radius));
            }
    }
}

TEST_CASE("rectangle root counting") {
    // z^2 + 1: roots +-i
    Poly p = Poly::from_longs({1, 0, 1});
    CHECK(*count_roots_in_rect(p, BoxC(QIv(Rat(-1), Rat(1)), QIv(Rat(1, 2), Rat(2)))) == 1);
    CHECK(*count_roots_in_rect(p, BoxC(QIv(Rat(-2), Rat(2)), QIv(Rat(-2), Rat(2)))) == 2);
    CHECK(*count_roots_in_rect(p, BoxC(QIv(Rat(1), Rat(2)), QIv(Rat(1), Rat(2)))) == 0);
    // root on the boundary is reported, not miscounted
    CHECK(!count_roots_in_rect(p, BoxC(QIv(Rat(-1), Rat(1)), QIv(Rat(-1), Rat(1)))).has_value());
    // multiple roots count with multiplicity
    Poly sq = Poly::from_longs({-1, 1}).pow(2) * Poly::from_longs({-3, 1});
    CHECK(*count_roots_in_rect(sq, BoxC(QIv(Rat(0), Rat(2)), QIv(Rat(-1), Rat(1)))) == 2);
}

TEST_CASE("is_weil_poly: worked examples") {
    // H^2 of P^1 over F_5
    CHECK(is_weil_poly(linear(1, -5), Int(5), 2).pure);
    // elliptic numerator over F_5 (a = 2 from the affine point count)
    CHECK(is_weil_poly(Poly::from_longs({1, -2, 5}), Int(5), 1).pure);
    // mixed weights 2 and 0
    auto cert = is_weil_poly(linear(1, -5) * linear(1, -1), Int(5), 1);
    CHECK(!cert.pure);
    CHECK(cert.integral);
    REQUIRE(!cert.offending.empty());
    bool found_one = false;
    for (auto& b : cert.offending)
        if (b.rect.contains(GaussRat{Rat(1), Rat(0)})) found_one = true;
    CHECK(found_one);
    // non-integral coefficients are impure
    CHECK(!is_weil_poly(Poly{std::vector<Rat>{Rat(1), Rat(1, 2)}}, Int(5), 0).pure);
    CHECK_THROWS_AS(is_weil_poly(linear(2, 1), Int(5), 0), InputError);
}

TEST_CASE("is_weil_poly agrees with its weight-reciprocal") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> pick(0, 3);
    Int q(3);
    for (int trial = 0; trial < 20; ++trial) {
        // assemble products of certified weight-w factors and junk factors
        long w = 2;
        Poly p(Rat(1));
        for (int i = 0; i < 3; ++i) {
            switch (pick(rng)) {
                case 0: p = p * linear(1, -3); break;          // weight 2 at q=3
                case 1: p = p * Poly::from_longs({1, -2, 9}); break;  // |lambda|^2 = 9... weight 2
                case 2: p = p * linear(1, -1); break;          // weight 0 junk
                default: p = p * linear(1, -2); break;         // non-integral weight junk
            }
        }
        auto a = is_weil_poly(p, q, w);
        auto b = is_weil_poly(weight_dual_poly(p, q, w), q, w);
        CHECK(a.pure == b.pure);
    }
}

TEST_CASE("weight_dual_poly: worked examples and involution") {
    Poly ell = Poly::from_longs({1, -2, 5});
    CHECK(weight_dual_poly(ell, Int(5), 1) == ell);
    CHECK(weight_dual_poly(linear(1, -2), Int(2), 2) == linear(1, -2));
    Poly d = weight_dual_poly(linear(1, -2), Int(2), 0);
    CHECK(d == Poly{std::vector<Rat>{Rat(1), Rat(-1, 2)}});
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coef(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rat> c{Rat(1)};
        for (int i = 0; i < 4; ++i) c.emplace_back(coef(rng));
        Poly p{std::move(c)};
        if (p.degree() < 1) continue;
        long w = trial % 3;
        CHECK(weight_dual_poly(weight_dual_poly(p, Int(7), w), Int(7), w) == p);
    }
}

TEST_CASE("weight_split_poly: worked examples") {
    auto ws = weight_split_poly(linear(1, -1) * linear(1, -5), Int(5));
    REQUIRE(ws.size() == 2);
    CHECK(ws[0] == linear(1, -1));
    CHECK(ws[2] == linear(1, -5));
    // elliptic: single weight 1
    ws = weight_split_poly(Poly::from_longs({1, -2, 5}), Int(5));
    REQUIRE(ws.size() == 1);
    CHECK(ws[1] == Poly::from_longs({1, -2, 5}));
    CHECK_THROWS_AS(weight_split_poly(linear(1, -2), Int(5)), NonIntegralWeightError);
    // repeated factors keep their multiplicity
    ws = weight_split_poly(linear(1, -1).pow(2) * Poly::from_longs({1, -2, 5}), Int(5));
    CHECK(ws[0] == linear(1, -1).pow(2));
    CHECK(ws[1] == Poly::from_longs({1, -2, 5}));
}

TEST_CASE("gcd free basis splits shared factors") {
    Poly a = linear(-1, 1).pow(2) * linear(-2, 1);
    Poly b = linear(-1, 1) * linear(-3, 1);
    auto gfb = gcd_free_basis({a, b});
    Poly back_a(Rat(1)), back_b(Rat(1));
    for (size_t i = 0; i < gfb.basis.size(); ++i) {
        back_a = back_a * gfb.basis[i].pow(gfb.exponents[0][i]);
        back_b = back_b * gfb.basis[i].pow(gfb.exponents[1][i]);
    }
    CHECK(back_a == a.monic());
    CHECK(back_b == b.monic());
    for (size_t i = 0; i < gfb.basis.size(); ++i)
        for (size_t j = i + 1; j < gfb.basis.size(); ++j)
            CHECK(poly_gcd(gfb.basis[i], gfb.basis[j]).degree() == 0);
}
