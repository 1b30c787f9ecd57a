#include <doctest.h>

#include <random>

#include "weilform/frobenius.hpp"

using namespace weilform;

namespace {

Mat mat2(long a, long b, long c, long d) {
    Mat m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

Mat jordan_block(long lambda, int e) {
    Mat m(e, e);
    for (int i = 0; i < e; ++i) {
        m(i, i) = lambda;
        if (i + 1 < e) m(i, i + 1) = 1;
    }
    return m;
}

Mat block_diag(const std::vector<Mat>& blocks) {
    int n = 0;
    for (const auto& b : blocks) n += b.rows();
    Mat m(n, n);
    int at = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m(at + i, at + j) = b(i, j);
        at += b.rows();
    }
    return m;
}

}  // namespace

TEST_CASE("module validation") {
    CHECK_THROWS_AS(FrobeniusModule(mat2(1, 0, 0, 0), Int(5)), InputError);  // singular
    CHECK_THROWS_AS(FrobeniusModule(Mat::identity(2), Int(6)), InputError);  // not a prime power
    CHECK_THROWS_AS(FrobeniusModule(Mat::identity(1), Int(5), 2), InputError);  // wrong declared weight
    CHECK(is_prime_power(Int(9)));
    CHECK(is_prime_power(Int(7)));
    CHECK(is_prime_power(Int(32)));
    CHECK(!is_prime_power(Int(12)));
    CHECK(!is_prime_power(Int(1)));
}

TEST_CASE("char_poly: worked examples") {
    CHECK(char_poly(FrobeniusModule(Mat::identity(2), Int(5))) == Poly::from_longs({1, -2, 1}));
    Mat f(1, 1);
    f(0, 0) = 5;
    CHECK(char_poly(FrobeniusModule(f, Int(5), 2)) == Poly::from_longs({1, -5}));
    CHECK(char_poly(FrobeniusModule(mat2(1, 1, 0, 1), Int(5))) == Poly::from_longs({1, -2, 1}));
    CHECK(char_poly(FrobeniusModule(Mat(0, 0), Int(5))) == Poly(Rat(1)));
}

TEST_CASE("invariant factors: worked examples") {
    auto f = invariant_factors(FrobeniusModule(Mat::identity(2), Int(5)));
    REQUIRE(f.size() == 2);
    CHECK(f[0] == Poly::from_longs({-1, 1}));
    CHECK(f[1] == Poly::from_longs({-1, 1}));
    f = invariant_factors(FrobeniusModule(mat2(1, 1, 0, 1), Int(5)));
    REQUIRE(f.size() == 1);
    CHECK(f[0] == Poly::from_longs({-1, 1}).pow(2));
    f = invariant_factors(FrobeniusModule(block_diag({jordan_block(2, 2), jordan_block(2, 1)}), Int(5)));
    REQUIRE(f.size() == 2);
    CHECK(f[0] == Poly::from_longs({-2, 1}));
    CHECK(f[1] == Poly::from_longs({-2, 1}).pow(2));
}

TEST_CASE("jordan profile: worked examples") {
    auto p = jordan_profile(FrobeniusModule(mat2(1, 1, 0, 1), Int(5)));
    REQUIRE(p.layers.size() == 1);
    CHECK(p.layers[2] == Poly::from_longs({-1, 1}));
    p = jordan_profile(FrobeniusModule(Mat::identity(2), Int(5)));
    REQUIRE(p.layers.size() == 1);
    CHECK(p.layers[1] == Poly::from_longs({-1, 1}).pow(2));
    p = jordan_profile(FrobeniusModule(block_diag({jordan_block(2, 2), jordan_block(3, 1)}), Int(5)));
    REQUIRE(p.layers.size() == 2);
    CHECK(p.layers[1] == Poly::from_longs({-3, 1}));
    CHECK(p.layers[2] == Poly::from_longs({-2, 1}));
}

TEST_CASE("profile reconstruction and dimension bookkeeping on random modules") {
    std::mt19937 rng(314159);
    std::uniform_int_distribution<int> esize(1, 3);
    std::uniform_int_distribution<long> eig(1, 4);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Mat> blocks;
        int dim = 0;
        JordanProfile expected;
        while (dim < 8) {
            int e = esize(rng);
            long lam = eig(rng);
            blocks.push_back(jordan_block(lam, e));
            Poly acc = expected.layers.count(e) ? expected.layers[e] : Poly(Rat(1));
            expected.layers[e] = acc * Poly::from_longs({-lam, 1});
            dim += e;
        }
        FrobeniusModule m(block_diag(blocks), Int(5));
        JordanProfile got = jordan_profile(m);
        CHECK(got == expected);
        CHECK(got.dimension() == m.dimension());
        // realizing the profile gives the same profile back
        FrobeniusModule realized = module_from_profile(got, Int(5));
        CHECK(jordan_profile(realized) == got);
    }
}

TEST_CASE("weight split of a module, pure and mixed") {
    Mat f = block_diag({jordan_block(1, 1), jordan_block(5, 1)});
    auto ws = weight_split(FrobeniusModule(f, Int(5)));
    REQUIRE(ws.size() == 2);
    CHECK(ws[0] == Poly::from_longs({1, -1}));
    CHECK(ws[2] == Poly::from_longs({1, -5}));
    // pure module: single declared weight
    Mat ell(2, 2);
    ell(0, 1) = -5;
    ell(1, 0) = 1;
    ell(1, 1) = 2;  // companion of T^2 - 2T + 5
    FrobeniusModule em(ell, Int(5), 1);
    auto ws2 = weight_split(em);
    REQUIRE(ws2.size() == 1);
    CHECK(ws2.count(1) == 1);
    CHECK_THROWS_AS(weight_split(FrobeniusModule(mat2(2, 0, 0, 1), Int(5))), NonIntegralWeightError);
}

TEST_CASE("profiles are invariant under conjugation") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> shear(-2, 2);
    Mat f = block_diag({jordan_block(2, 2), jordan_block(3, 1), jordan_block(2, 1)});
    JordanProfile base = jordan_profile(FrobeniusModule(f, Int(5)));
    for (int trial = 0; trial < 8; ++trial) {
        Mat g = Mat::identity(4);
        for (int k = 0; k < 3; ++k) {
            int i = static_cast<int>(rng() % 4), j = static_cast<int>(rng() % 4);
            if (i == j) continue;
            Mat s = Mat::identity(4);
            s(i, j) = shear(rng);
            g = g * s;
        }
        Mat conj = inverse(g) * f * g;
        CHECK(jordan_profile(FrobeniusModule(conj, Int(5))) == base);
        CHECK(char_poly(FrobeniusModule(conj, Int(5))) == char_poly(FrobeniusModule(f, Int(5))));
    }
}

TEST_CASE("semisimplify flattens layers") {
    JordanProfile p;
    p.layers[2] = Poly::from_longs({-1, 1});
    p.layers[1] = Poly::from_longs({-3, 1});
    JordanProfile s = semisimplify(p);
    REQUIRE(s.layers.size() == 1);
    CHECK(s.layers[1] == Poly::from_longs({-1, 1}).pow(2) * Poly::from_longs({-3, 1}));
}
