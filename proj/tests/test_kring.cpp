#include <doctest.h>

#include <functional>

#include "weilform/kring.hpp"

using namespace weilform;

namespace {

VirtualWeilClass line(long lambda, long w, long q) {
    VirtualWeilClass x{Int(q)};
    x.set_component(w, Poly::from_longs({1, -lambda}), Poly(Rat(1)));
    return x;
}

Mat companion_weil(const Poly& p) {
    // companion of the monic reversal of p (inverse roots become eigenvalues)
    Poly monic = p.reversed().monic();
    int n = monic.degree();
    Mat c(n, n);
    for (int i = 1; i < n; ++i) c(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) c(i, n - 1) = -monic[i];
    return c;
}

}  // namespace

TEST_CASE("class construction validates purity") {
    VirtualWeilClass x{Int(4)};
    x.set_component(1, Poly::from_longs({1, -2}), Poly(Rat(1)));  // |2|^2 = 4^1
    CHECK(x.components().size() == 1);
    CHECK_THROWS_AS(VirtualWeilClass(Int(4)).set_component(2, Poly::from_longs({1, -2}), Poly(Rat(1))),
                    InputError);
    CHECK_THROWS_AS(VirtualWeilClass(Int(6)), InputError);
}

TEST_CASE("kr_add and kr_neg: worked examples") {
    // two lines in the same weight multiply their factors
    VirtualWeilClass x = line(2, 1, 4);
    CHECK(kr_add(x, kr_neg(x)).is_zero());
    VirtualWeilClass y = line(-2, 1, 4);
    VirtualWeilClass s = kr_add(x, y);
    REQUIRE(s.components().count(1) == 1);
    CHECK(s.components().at(1).num == Poly::from_longs({1, -2}) * Poly::from_longs({1, 2}));
    CHECK(s.rank() == 2);
    CHECK_THROWS_AS(kr_add(line(2, 1, 4), line(3, 1, 9)), InputError);
}

TEST_CASE("kr_tensor: worked examples") {
    // rank-1 multiplicativity at q = 6... 6 is not a prime power; use q = 8
    VirtualWeilClass a = line(8, 2, 8);
    CHECK(kr_tensor(a, a).components().at(4).num == Poly::from_longs({1, -64}));
    // unit is the identity
    VirtualWeilClass u = VirtualWeilClass::unit(Int(5));
    VirtualWeilClass e = VirtualWeilClass::from_module(
        FrobeniusModule(companion_weil(Poly::from_longs({1, -2, 5})), Int(5), 1));
    CHECK(kr_tensor(e, u) == e);
    // elliptic square: degree-4 component at weight 2 with the right det and trace
    VirtualWeilClass sq = kr_tensor(e, e);
    REQUIRE(sq.components().count(2) == 1);
    const Poly& num = sq.components().at(2).num;
    CHECK(num.degree() == 4);
    // inverse roots {l^2, lm, lm, m^2}: sum = a^2 = 4, product = q^4 = 625
    CHECK(num[1] == Rat(-4));
    CHECK(num[4] == Rat(625));
}

TEST_CASE("kr_dual, kr_tate, kr_dbar: worked examples and commutations") {
    VirtualWeilClass e = VirtualWeilClass::from_module(
        FrobeniusModule(companion_weil(Poly::from_longs({1, -2, 5})), Int(5), 1));
    CHECK(kr_dbar(e) == e);  // elliptic functional equation
    VirtualWeilClass t = kr_tate(line(5, 2, 5), 1);
    REQUIRE(t.components().count(0) == 1);
    CHECK(t.components().at(0).num == Poly::from_longs({1, -1}));
    VirtualWeilClass d = kr_dual(line(2, 1, 4));
    REQUIRE(d.components().count(-1) == 1);
    CHECK(d.components().at(-1).num == Poly{std::vector<Rat>{Rat(1), Rat(-1, 2)}});
    // dual, tate, dbar commute
    VirtualWeilClass x = kr_add(e, line(5, 2, 5));
    CHECK(kr_dual(kr_tate(x, 1)) == kr_tate(kr_dual(x), -1));
    CHECK(kr_dbar(kr_tate(x, 1)) == kr_tate(kr_dbar(x), 1));
    CHECK(kr_dbar(kr_dbar(x)) == x);
}

TEST_CASE("kr_lambda: worked examples") {
    VirtualWeilClass x = line(2, 1, 4);
    CHECK(kr_lambda(x, 1) == x);
    CHECK(kr_lambda(x, 0) == VirtualWeilClass::unit(Int(4)));
    CHECK(kr_lambda(x, 2).is_zero());  // exterior square of a line
    // a rank-2 class diag(5, -5) at q = 5, w = 2: exterior square -25 at w = 4
    VirtualWeilClass y = kr_add(line(5, 2, 5), line(-5, 2, 5));
    VirtualWeilClass l2 = kr_lambda(y, 2);
    REQUIRE(l2.components().count(4) == 1);
    CHECK(l2.components().at(4).num == Poly::from_longs({1, 25}));
}

TEST_CASE("lambda matches the exterior-power matrix oracle") {
    // honest module of dimension 3 at q = 5
    Mat f(3, 3);
    f(0, 0) = 1;         // weight 0 line
    f(1, 2) = -5;        // companion of T^2 - 2T + 5 (weight 1)
    f(2, 1) = 1;
    f(2, 2) = 2;
    FrobeniusModule m(f, Int(5));
    VirtualWeilClass x = VirtualWeilClass::from_module(m);
    for (int mm = 1; mm <= 3; ++mm) {
        // wedge power matrix
        std::vector<std::vector<int>> subsets;
        std::vector<int> idx;
        std::function<void(int)> rec = [&](int start) {
            if (static_cast<int>(idx.size()) == mm) {
                subsets.push_back(idx);
                return;
            }
            for (int i = start; i < 3; ++i) {
                idx.push_back(i);
                rec(i + 1);
                idx.pop_back();
            }
        };
        rec(0);
        Mat wedge(static_cast<int>(subsets.size()), static_cast<int>(subsets.size()));
        for (size_t r = 0; r < subsets.size(); ++r)
            for (size_t c = 0; c < subsets.size(); ++c) {
                Mat minor(mm, mm);
                for (int i = 0; i < mm; ++i)
                    for (int j = 0; j < mm; ++j) minor(i, j) = f(subsets[r][static_cast<size_t>(i)], subsets[c][static_cast<size_t>(j)]);
                wedge(static_cast<int>(r), static_cast<int>(c)) = det(minor);
            }
        VirtualWeilClass oracle = VirtualWeilClass::from_module(FrobeniusModule(wedge, Int(5)));
        CHECK(kr_lambda(x, mm) == oracle);
    }
}

TEST_CASE("kr_membership: worked examples") {
    // elliptic class at weight 1: member for sigma = +1 (generators symplectic)
    VirtualWeilClass e = VirtualWeilClass::from_module(
        FrobeniusModule(companion_weil(Poly::from_longs({1, -2, 5})), Int(5), 1));
    CHECK(kr_membership(e, +1).member);
    // m_3 = 2 at q = 9 (3 = sqrt(q), weight 1): both memberships hold
    VirtualWeilClass x{Int(9)};
    x.set_component(1, Poly::from_longs({1, -3}).pow(2), Poly(Rat(1)));
    CHECK(kr_membership(x, +1).member);
    CHECK(kr_membership(x, -1).member);
    // m_3 = 1: symmetric but odd at the special eigenvalue, so only the
    // symmetry-graded membership holds
    VirtualWeilClass y{Int(9)};
    y.set_component(1, Poly::from_longs({1, -3}), Poly(Rat(1)));
    CHECK(kr_membership(y, -1).member);
    CHECK(!kr_membership(y, +1).member);
    // the elliptic class is in both graded subgroups: the sigma = -1 grading
    // asks for symmetry only at odd weight, and the sigma = +1 grading adds
    // evenness at +-sqrt(5), which holds vacuously
    CHECK(kr_membership(e, -1).member);
}

TEST_CASE("dbar is a ring and lambda map on fixed classes") {
    VirtualWeilClass a = VirtualWeilClass::from_module(
        FrobeniusModule(companion_weil(Poly::from_longs({1, -2, 5})), Int(5), 1));
    VirtualWeilClass b = kr_add(line(5, 2, 5), kr_neg(line(1, 0, 5)));
    CHECK(kr_dbar(kr_tensor(a, b)) == kr_tensor(kr_dbar(a), kr_dbar(b)));
    for (int mm = 0; mm <= 3; ++mm)
        CHECK(kr_dbar(kr_lambda(a, mm)) == kr_lambda(kr_dbar(a), mm));
    // lambda_t(x + y) = lambda_t(x) lambda_t(y) degreewise
    for (int mm = 1; mm <= 3; ++mm) {
        VirtualWeilClass lhs = kr_lambda(kr_add(a, b), mm);
        VirtualWeilClass rhs{Int(5)};
        for (int i = 0; i <= mm; ++i)
            rhs = kr_add(rhs, kr_tensor(kr_lambda(a, i), kr_lambda(b, mm - i)));
        CHECK(lhs == rhs);
    }
}
