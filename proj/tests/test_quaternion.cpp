#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace cliffpar;

namespace {

const QuadField Q3(3);
const F2TUField F2;
const auto H = QuaternionAlgebra<QuadField>::ordinary(Q3);
const auto C = QuaternionAlgebra<F2TUField>::cyclic_char2(F2, parse_field_element(F2, "t+u"));

template <class F>
Quaternion<F> q(const QuaternionAlgebra<F>& A, const char* s) {
    return parse_quaternion(A, s);
}

template <class F>
std::string show(const QuaternionAlgebra<F>& A, const Quaternion<F>& x) {
    return format_quaternion(A.field(), x);
}

}  // namespace

TEST(Ordinary, HamiltonProductAndSumOfSquares) {
    SeededRng rng(31);
    for (int n = 0; n < 500; ++n) {
        const auto x = random_quaternion(H, rng), y = random_quaternion(H, rng);
        EXPECT_EQ(H.mul(x, y).c, oracle::hamilton(x.c, y.c));
        const auto& c = x.c;
        EXPECT_EQ(H.norm(x), c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]);
        EXPECT_EQ(H.trace(x), Q3.from_int(2) * c[0]);
    }
}

TEST(Ordinary, GeneralNormForm) {
    const RationalField Q;
    SeededRng rng(32);
    for (long a : {-1L, -2L, 3L})
        for (long b : {-1L, -5L, 7L}) {
            const auto A = QuaternionAlgebra<RationalField>::ordinary(Q, Rational(a), Rational(b));
            EXPECT_EQ(A.mul(A.basis(1), A.basis(1)), A.scalar(Rational(a)));
            EXPECT_EQ(A.mul(A.basis(2), A.basis(2)), A.scalar(Rational(b)));
            for (int n = 0; n < 50; ++n) {
                const auto x = random_quaternion(A, rng);
                const auto& c = x.c;
                EXPECT_EQ(A.norm(x), c[0] * c[0] - Rational(a) * c[1] * c[1] - Rational(b) * c[2] * c[2] +
                                         Rational(a * b) * c[3] * c[3]);
            }
        }
}

TEST(Ordinary, Examples) {
    EXPECT_EQ(Q3.format(H.norm(q(H, "i+(1+s)*j"))), "5+2*s");
    EXPECT_EQ(H.inverse(q(H, "j")), q(H, "-j"));
    EXPECT_EQ(H.bilinear_form(H.one(), H.one()), Q3.from_int(2));
    EXPECT_TRUE(H.bilinear_form(q(H, "i"), q(H, "j")).is_zero());
    const auto h = q(H, "i+j");
    EXPECT_EQ(H.mul(H.mul(h, q(H, "i")), H.inverse(h)), q(H, "j"));
    EXPECT_THROW(H.inverse(H.zero()), Error);
}

TEST(CyclicChar2, BasisTable) {
    const char* expected[4][4] = {{"1", "i", "j", "k"},
                                  {"i", "1+i", "k", "j+k"},
                                  {"j", "j+k", "t+u", "(t+u)+(t+u)*i"},
                                  {"k", "j", "(t+u)*i", "t+u"}};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            EXPECT_EQ(C.mul(C.basis(a), C.basis(b)), q(C, expected[a][b])) << a << "*" << b;
    EXPECT_EQ(C.conj(q(C, "i")), q(C, "1+i"));
    EXPECT_EQ(C.conj(q(C, "j")), q(C, "j"));
    EXPECT_EQ(C.conj(q(C, "k")), q(C, "k"));
}

TEST(CyclicChar2, ProductAndNormMatchHandTable) {
    const auto b = parse_field_element(F2, "t+u");
    const auto tab = oracle::cyclic_char2_table(F2.one(), b);
    SeededRng rng(33);
    for (int n = 0; n < 200; ++n) {
        const auto x = random_quaternion(C, rng), y = random_quaternion(C, rng);
        EXPECT_EQ(C.mul(x, y).c, oracle::table_product(tab, x.c, y.c));
        const auto& c = x.c;
        EXPECT_EQ(C.norm(x), c[0] * c[0] + c[0] * c[1] + c[1] * c[1] + b * (c[2] * c[2] + c[2] * c[3] + c[3] * c[3]));
        EXPECT_EQ(C.trace(x), c[1]);
    }
}

TEST(CyclicChar2, Examples) {
    EXPECT_EQ(C.inverse(q(C, "1+i")), q(C, "i"));
    EXPECT_TRUE(C.bilinear_form(C.one(), C.one()).is_zero());
    EXPECT_EQ(F2.format(C.norm(q(C, "i+u*j"))), F2.format(parse_field_element(F2, "1+u^2*(t+u)")));
    EXPECT_EQ(C.norm(q(C, "j+u*k")), parse_field_element(F2, "(u+t)*(1+u+u^2)"));
}

template <class F>
void structural_laws(const QuaternionAlgebra<F>& A, std::uint64_t seed) {
    EXPECT_FALSE(A.find_nonassociative_triple());
    EXPECT_TRUE(A.unit_is_two_sided());
    EXPECT_EQ(A.centralizer_dimension(), 1U);
    EXPECT_FALSE(A.gram_determinant().is_zero());
    SeededRng rng(seed);
    for (int n = 0; n < 100; ++n) {
        const auto x = random_quaternion(A, rng), y = random_quaternion(A, rng);
        EXPECT_EQ(A.norm(A.mul(x, y)), A.norm(x) * A.norm(y)) << show(A, x) << " " << show(A, y);
        EXPECT_EQ(A.conj(A.mul(x, y)), A.mul(A.conj(y), A.conj(x)));
        EXPECT_TRUE(A.quadratic_identity_check(x));
        EXPECT_EQ(A.bilinear_form(x, y), A.bilinear_form(y, x));
        if (!x.is_zero()) {
            EXPECT_EQ(A.mul(x, A.inverse(x)), A.one());
        }
    }
}

TEST(Structure, OrdinaryOverQSqrt3) { structural_laws(H, 34); }
TEST(Structure, CyclicChar2) { structural_laws(C, 35); }

TEST(Structure, OverrideBreaksAssociativity) {
    const auto bad = parse_algebra(RationalField{}, "ordinary(-1,-1) override i*j=-k");
    EXPECT_TRUE(bad.overridden());
    EXPECT_TRUE(bad.find_nonassociative_triple());
}

TEST(Structure, SplitAlgebraHasZeroDivisors) {
    const auto M = QuaternionAlgebra<RationalField>::ordinary(RationalField{}, Rational(1), Rational(1));
    const auto x = parse_quaternion(M, "1+i");
    EXPECT_TRUE(M.norm(x).is_zero());
    EXPECT_THROW(M.inverse(x), Error);
}
