#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace cliffpar;

namespace {

const QuadField Q3(3);
const F2TUField F2;
const auto H = QuaternionAlgebra<QuadField>::ordinary(Q3);
const auto C = QuaternionAlgebra<F2TUField>::cyclic_char2(F2, parse_field_element(F2, "t+u"));

template <class F>
Line<F> L(const QuaternionAlgebra<F>& A, const char* s) {
    return parse_line(A, s);
}

template <class F>
ProjPoint<F> pt(const QuaternionAlgebra<F>& A, const char* s) {
    return ProjPoint<F>(A.field(), parse_quaternion(A, s));
}

template <class F>
std::size_t rank_of(const F& f, const Quaternion<F>& x, const Quaternion<F>& y) {
    Rows<typename F::element> m{{x.c[0], x.c[1], x.c[2], x.c[3]}, {y.c[0], y.c[1], y.c[2], y.c[3]}};
    return rref(f, m).size();
}

}  // namespace

TEST(Lines, CanonicalForm) {
    EXPECT_EQ(L(H, "span(1+i; 1-i)"), L(H, "span(1; i)"));
    EXPECT_EQ(L(H, "span(2*j+k; s*k)"), L(H, "span(j; k)"));
    EXPECT_THROW(L(H, "span(i; 2*i)"), Error);
    EXPECT_EQ(pt(H, "2*i+2*s*j"), pt(H, "i+s*j"));
    EXPECT_THROW(pt(H, "0"), Error);
}

TEST(Lines, Membership) {
    const auto M = L(H, "span(1; i+(1+s)*j)");
    EXPECT_TRUE(M.contains(Q3, parse_quaternion(H, "3+(2+s)*i+(5+3*s)*j")));
    EXPECT_FALSE(M.contains(Q3, parse_quaternion(H, "k")));
}

TEST(Anchors, Examples) {
    EXPECT_EQ(left_anchor(H, L(H, "span(j; k)")), L(H, "span(1; i)"));
    EXPECT_EQ(right_anchor(H, L(H, "span(j; k)")), L(H, "span(1; i)"));
    EXPECT_EQ(left_anchor(H, L(H, "span(1+i; j)")), L(H, "span(1; j-k)"));
}

TEST(Parallelism, Examples) {
    EXPECT_TRUE(is_left_parallel(H, L(H, "span(j; k)"), L(H, "span(1; i)")));
    EXPECT_FALSE(is_left_parallel(H, L(H, "span(1; i)"), L(H, "span(1; j)")));
    EXPECT_EQ(parallel_through(H, pt(H, "j"), L(H, "span(1; i)"), Side::Left), L(H, "span(j; k)"));
    EXPECT_EQ(parallel_through(H, pt(H, "j"), L(H, "span(1; i)"), Side::Right), L(H, "span(j; k)"));
    EXPECT_EQ(parallel_through(H, pt(H, "1"), L(H, "span(j; k)"), Side::Left), L(H, "span(1; i)"));
}

// Left classes are orbits of left multiplication, so g M and M must always be
// left parallel, and M g right parallel; mixed parallelograms close.
template <class F>
void double_space(const QuaternionAlgebra<F>& A, std::uint64_t seed, int count) {
    SeededRng rng(seed);
    const auto coeffs = small_coefficients(A.field(), 1);
    auto small = [&] {
        for (;;) {
            auto pick = [&] { return coeffs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(coeffs.size()) - 1))]; };
            auto x = A.make(pick(), pick(), pick(), pick());
            if (!x.is_zero()) return x;
        }
    };
    for (int n = 0; n < count; ++n) {
        const auto x = small(), y = small();
        if (rank_of(A.field(), x, y) < 2) continue;
        const auto M = line_span(A, x, y);
        const auto g = small(), h = small();
        const auto gM = left_multiply(A, g, M), Mh = right_multiply(A, M, h);
        EXPECT_TRUE(is_left_parallel(A, M, gM));
        EXPECT_TRUE(is_right_parallel(A, M, Mh));
        EXPECT_EQ(left_anchor(A, gM), left_anchor(A, M));
        EXPECT_TRUE(in_star(A, left_anchor(A, M)));
        EXPECT_TRUE(is_left_parallel(A, Mh, left_multiply(A, g, Mh)));
        EXPECT_TRUE(is_right_parallel(A, gM, right_multiply(A, gM, h)));
        const auto p = ProjPoint<F>(A.field(), small());
        const auto through = parallel_through(A, p, M, Side::Left);
        EXPECT_TRUE(through.contains(A.field(), p.rep()));
        EXPECT_TRUE(is_left_parallel(A, through, M));
    }
}

TEST(Parallelism, DoubleSpaceOrdinary) { double_space(H, 41, 100); }
TEST(Parallelism, DoubleSpaceChar2) { double_space(C, 42, 30); }

template <class F>
void polarity(const QuaternionAlgebra<F>& A, std::uint64_t seed, int count) {
    SeededRng rng(seed);
    for (int n = 0; n < count; ++n) {
        const auto M = random_line(A, rng);
        const auto P = orthocomplement(A, M);
        for (const auto& x : M.rows())
            for (const auto& y : P.rows()) EXPECT_TRUE(A.bilinear_form(x, y).is_zero());
        EXPECT_EQ(orthocomplement(A, P), M);
        EXPECT_TRUE(is_left_parallel(A, M, P));
        EXPECT_TRUE(is_right_parallel(A, M, P));
    }
}

TEST(Orthocomplement, Example) {
    EXPECT_EQ(orthocomplement(H, L(H, "span(1; i)")), L(H, "span(j; k)"));
    EXPECT_EQ(orthocomplement(C, L(C, "span(1; i)")), L(C, "span(j; k)"));
}
TEST(Orthocomplement, Ordinary) { polarity(H, 43, 60); }
TEST(Orthocomplement, Char2) { polarity(C, 44, 20); }

TEST(Star, Separability) {
    EXPECT_TRUE(is_separable(C, L(C, "span(1; i)")));
    EXPECT_FALSE(is_separable(C, L(C, "span(1; j)")));
    EXPECT_FALSE(in_star(C, L(C, "span(j; k)")));
    EXPECT_THROW(star_generator(C, L(C, "span(j; k)")), Error);
    EXPECT_THROW(is_separable(H, L(H, "span(1; i)")), Error);
    SeededRng rng(45);
    for (int n = 0; n < 50; ++n) {
        const auto S = random_star_line(C, rng);
        EXPECT_EQ(is_separable(C, S), !C.trace(star_generator(C, S)).is_zero());
        EXPECT_EQ(star_generator(C, S), S.row(1));
    }
}
