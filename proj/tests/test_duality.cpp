#include <doctest.h>

#include "weilform/duality.hpp"

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

Mat diag(const std::vector<Rat>& entries) {
    Mat m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
    for (size_t i = 0; i < entries.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = entries[i];
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

Mat jordan_block(long lambda, int e) {
    Mat m(e, e);
    for (int i = 0; i < e; ++i) {
        m(i, i) = lambda;
        if (i + 1 < e) m(i, i + 1) = 1;
    }
    return m;
}

bool equivariant(const Mat& f, const Mat& b, const Rat& qw) {
    return (f.transpose() * b * f - b * qw).is_zero();
}

}  // namespace

TEST_CASE("invariant pairing space: worked examples") {
    // 1-dim fixed line, w = 0, symmetric
    FrobeniusModule one(Mat::identity(1), Int(5));
    auto basis = invariant_pairing_space(one, 0, +1);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0](0, 0) != 0);
    // E_2 shadow: skew solutions are spanned by [[0,1],[-1,0]]
    FrobeniusModule e2(mat2(1, 1, 0, 1), Int(5));
    basis = invariant_pairing_space(e2, 0, -1);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0](0, 1) != 0);
    CHECK(basis[0](0, 0) == 0);
    CHECK(equivariant(e2.frobenius(), basis[0], Rat(1)));
    // symmetric solutions for E_2 are all degenerate
    basis = invariant_pairing_space(e2, 0, +1);
    for (const Mat& b : basis) {
        CHECK(b(0, 0) == 0);
        CHECK(b(0, 1) == 0);
    }
    CHECK(!find_nondegenerate(basis));
}

TEST_CASE("find_nondegenerate: worked examples") {
    Mat skew = mat2(0, 1, -1, 0);
    auto w = find_nondegenerate({skew});
    REQUIRE(w.has_value());
    CHECK(det(*w) != 0);
    CHECK(!find_nondegenerate({mat2(0, 0, 0, 1)}));
    auto w2 = find_nondegenerate({mat2(1, 0, 0, 0), mat2(0, 0, 0, 1)});
    REQUIRE(w2.has_value());
    CHECK(det(*w2) != 0);
    CHECK(!find_nondegenerate({}));
}

TEST_CASE("classify: E_2 shadow is minus-self-dual only") {
    FrobeniusModule e2(mat2(1, 1, 0, 1), Int(7), 0);
    DualityVerdict v = classify_self_duality(e2, 0);
    CHECK(v.self_dual);
    CHECK(v.minus_self_dual);
    CHECK(!v.plus_self_dual);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness_sign == -1);
    CHECK(equivariant(e2.frobenius(), *v.witness, Rat(1)));
    CHECK((v.witness->transpose() + *v.witness).is_zero());
    REQUIRE(!v.refusal_reasons.empty());
    CHECK(v.refusal_reasons[0].e == 2);
}

TEST_CASE("classify: hyperbolic plane is plus and minus") {
    // lambda and q^w/lambda with lambda != +-q^{w/2}: over Q this is the
    // companion of T^2 - aT + q^w (a rational eigenvalue of a pure module
    // is forced to be special, so the pair lives in a quadratic orbit)
    Mat c(2, 2);
    c(0, 1) = -5;
    c(1, 0) = 1;
    c(1, 1) = 2;  // companion of T^2 - 2T + 5, eigenvalues 1 +- 2i
    FrobeniusModule m(c, Int(5), 1);
    DualityVerdict v = classify_self_duality(m, 1);
    CHECK(v.self_dual);
    CHECK(v.plus_self_dual);
    CHECK(v.minus_self_dual);
}

TEST_CASE("classify: one-dimensional special line") {
    // F = [q^{w/2}] with w even: plus only
    FrobeniusModule m(diag({Rat(3)}), Int(3), 2);
    DualityVerdict v = classify_self_duality(m, 2);
    CHECK(v.plus_self_dual);
    CHECK(!v.minus_self_dual);
    CHECK(v.self_dual);
}

TEST_CASE("classify rejects mixed modules") {
    FrobeniusModule mixed(diag({Rat(1), Rat(5)}), Int(5));
    CHECK_THROWS_AS(classify_self_duality(mixed, 1), PurityError);
}

TEST_CASE("classify: irrational special pair via the quadratic divisor") {
    // companion of T^2 - 5 at q = 5, w = 1: eigenvalues +-sqrt(5), one 1x1 block each
    Mat c(2, 2);
    c(0, 1) = 5;
    c(1, 0) = 1;
    FrobeniusModule m(c, Int(5), 1);
    DualityVerdict v = classify_self_duality(m, 1);
    // mu_{+-sqrt(5),1} = 1 odd: minus refused, plus fine
    CHECK(v.plus_self_dual);
    CHECK(!v.minus_self_dual);
}

TEST_CASE("direct sum closure") {
    FrobeniusModule a(mat2(1, 1, 0, 1), Int(5), 0);                       // minus only
    FrobeniusModule b(diag({Rat(1)}), Int(5), 0);                         // plus only
    FrobeniusModule sum(block_diag({a.frobenius(), b.frobenius()}), Int(5), 0);
    DualityVerdict va = classify_self_duality(a, 0);
    DualityVerdict vb = classify_self_duality(b, 0);
    DualityVerdict vs = classify_self_duality(sum, 0);
    CHECK(va.minus_self_dual);
    CHECK(vb.plus_self_dual);
    // the sum mixes a plus-only and a minus-only piece: neither sign
    CHECK(vs.self_dual);
    CHECK(!vs.plus_self_dual);
    CHECK(!vs.minus_self_dual);
}

TEST_CASE("semisimple modules match the n_B parity criterion") {
    // layers concentrated in e = 1: sigma-self-duality reduces to evenness
    // of special multiplicities for sigma = -1 and symmetry alone for +1
    FrobeniusModule twice(diag({Rat(3), Rat(3)}), Int(3), 2);
    DualityVerdict v = classify_self_duality(twice, 2);
    CHECK(v.plus_self_dual);
    CHECK(v.minus_self_dual);  // n_B = 2 even
    FrobeniusModule once(diag({Rat(3)}), Int(3), 2);
    v = classify_self_duality(once, 2);
    CHECK(v.plus_self_dual);
    CHECK(!v.minus_self_dual);  // n_B = 1 odd
}

TEST_CASE("e.ss shadow: semisimplification gains both signs") {
    // J_1(2) + J_3(2) + J_2(2) at q = 2, w = 2: self-dual but neither sign;
    // the flattened profile is both plus- and minus-self-dual
    Mat f = block_diag({jordan_block(2, 1), jordan_block(2, 3), jordan_block(2, 2)});
    FrobeniusModule m(f, Int(2), 2);
    DualityVerdict v = classify_self_duality(m, 2);
    CHECK(v.self_dual);
    CHECK(!v.plus_self_dual);
    CHECK(!v.minus_self_dual);
    FrobeniusModule ss = module_from_profile(semisimplify(jordan_profile(m)), Int(2), 2);
    DualityVerdict vss = classify_self_duality(ss, 2);
    CHECK(vss.plus_self_dual);
    CHECK(vss.minus_self_dual);
}

TEST_CASE("two out of three: worked examples") {
    // whole == part: complement is the zero module
    FrobeniusModule e2(mat2(1, 1, 0, 1), Int(5), 0);
    DualityVerdict zero = two_out_of_three(e2, e2, 0, -1);
    CHECK(zero.minus_self_dual);
    // whole = F + F, part = F: complement F
    Mat ff = block_diag({e2.frobenius(), e2.frobenius()});
    DualityVerdict v = two_out_of_three(FrobeniusModule(ff, Int(5), 0), e2, 0, -1);
    CHECK(v.minus_self_dual);
    // hyperbolic plane + two special lines at q = 5, w = 2 (lambda = 3+4i)
    Mat hyp(2, 2);
    hyp(0, 1) = -25;
    hyp(1, 0) = 1;
    hyp(1, 1) = 6;  // companion of T^2 - 6T + 25
    Mat whole = block_diag({hyp, diag({Rat(5)}), diag({Rat(5)})});
    DualityVerdict vc = two_out_of_three(FrobeniusModule(whole, Int(5), 2),
                                         FrobeniusModule(hyp, Int(5), 2), 2, +1);
    CHECK(vc.plus_self_dual);
    // bad sub-profile is an input error
    CHECK_THROWS_AS(two_out_of_three(e2, FrobeniusModule(diag({Rat(1)}), Int(5), 0), 0, -1),
                    InputError);
}
