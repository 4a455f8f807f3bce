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

const auto Lroot = parse_line(H, "span(1; i+(1+s)*j)");
const CliffordLikeParallelism<QuadField> P(H, DefiningSet<QuadField>{{Lroot}});

}  // namespace

TEST(Maps, ApplyAndCompose) {
    const auto a = inner(H, q(H, "1+i"));
    EXPECT_EQ(a.apply(q(H, "j")), H.mul(H.mul(H.inverse(q(H, "1+i")), q(H, "j")), q(H, "1+i")));
    const auto g = galois_outer(H);
    EXPECT_EQ(g.apply(q(H, "s*i+j")), q(H, "-s*i+j"));
    EXPECT_EQ(g * g, identity_map(H));
    const auto b = left_translation(H, q(H, "2+j"));
    SeededRng rng(61);
    for (int n = 0; n < 50; ++n) {
        const auto x = random_quaternion(H, rng);
        EXPECT_EQ((b * a).apply(x), b.apply(a.apply(x)));
        EXPECT_EQ((b * g).inverse().apply((b * g).apply(x)), x);
        EXPECT_EQ(right_translation(H, q(H, "k")).apply(x), H.mul(x, q(H, "k")));
    }
}

TEST(Factorize, Examples) {
    const auto f1 = factorize(left_translation(H, q(H, "1+i")));
    EXPECT_EQ(f1.translation_part, q(H, "1+i"));
    EXPECT_EQ(f1.unit_part_kind, MapKind::Automorphism);
    const auto f2 = factorize(conjugation(H));
    EXPECT_EQ(f2.translation_part, H.one());
    EXPECT_EQ(f2.unit_part_kind, MapKind::Antiautomorphism);
    // Fixing i and j forces ij = k and ji = -k, so k -> -k reverses products.
    const auto flip = SemilinearMap<QuadField>::from_images(H, {H.one(), q(H, "i"), q(H, "j"), q(H, "-k")},
                                                            Sigma::Identity);
    EXPECT_EQ(classify(flip), MapKind::Antiautomorphism);
    const auto stretch = SemilinearMap<QuadField>::from_images(H, {H.one(), q(H, "i"), q(H, "j"), q(H, "2*k")},
                                                               Sigma::Identity);
    EXPECT_EQ(classify(stretch), MapKind::Neither);
    EXPECT_EQ(classify(galois_outer(H)), MapKind::Automorphism);
    EXPECT_EQ(classify(conjugation(H) * inner(H, q(H, "1+j"))), MapKind::Antiautomorphism);
    EXPECT_EQ(to_string(MapKind::Neither), std::string("neither"));
}

template <class F>
void roundtrip(const QuaternionAlgebra<F>& A, std::uint64_t seed, int count) {
    SeededRng rng(seed);
    const auto coeffs = small_coefficients(A.field(), 1);
    auto small = [&] {
        for (;;) {
            const auto x = A.make(coeffs[rng.uniform(0, static_cast<std::int64_t>(coeffs.size()) - 1)],
                                  coeffs[rng.uniform(0, static_cast<std::int64_t>(coeffs.size()) - 1)],
                                  coeffs[rng.uniform(0, static_cast<std::int64_t>(coeffs.size()) - 1)],
                                  coeffs[rng.uniform(0, static_cast<std::int64_t>(coeffs.size()) - 1)]);
            if (!x.is_zero()) return x;
        }
    };
    for (int n = 0; n < count; ++n) {
        const auto g = small(), h = small();
        auto beta = left_translation(A, g) * inner(A, h);
        MapKind want = MapKind::Automorphism;
        if (n % 3 == 1) {
            beta = beta * galois_outer(A);
        } else if (n % 3 == 2) {
            beta = beta * conjugation(A);
            want = MapKind::Antiautomorphism;
        }
        const auto fz = factorize(beta);
        EXPECT_EQ(fz.translation_part, g);
        EXPECT_EQ(fz.unit_part_kind, want);
        EXPECT_EQ(left_translation(A, fz.translation_part) * fz.unit_part, beta);
    }
}

TEST(Factorize, RoundtripOrdinary) { roundtrip(H, 62, 60); }
TEST(Factorize, RoundtripChar2) { roundtrip(C, 63, 15); }

TEST(Preservation, Root3Table) {
    const auto left = ParallelismModel<QuadField>::left();
    const auto right = ParallelismModel<QuadField>::right();
    const auto model = ParallelismModel<QuadField>::of(P);
    auto check = [&](const SemilinearMap<QuadField>& m, bool l, bool r, bool p) {
        EXPECT_EQ(preserves_parallelism(m, left).preserves, l);
        EXPECT_EQ(preserves_parallelism(m, right).preserves, r);
        EXPECT_EQ(preserves_parallelism(m, model).preserves, p);
    };
    check(galois_outer(H), true, true, false);
    check(conjugation(H), false, false, false);
    check(inner(H, q(H, "1+i")), true, true, true);
    check(left_translation(H, q(H, "2+j")) * inner(H, q(H, "i")), true, true, true);
    check(right_translation(H, q(H, "1+s*k")), true, true, true);
    const auto stretch = SemilinearMap<QuadField>::from_images(H, {H.one(), q(H, "i"), q(H, "j"), q(H, "2*k")},
                                                               Sigma::Identity);
    check(stretch, false, false, false);
    const auto v = preserves_parallelism(galois_outer(H), model);
    EXPECT_FALSE(v.diagnostic.empty());
}

TEST(Preservation, Antiautomorphisms) {
    const auto model = ParallelismModel<QuadField>::of(P);
    const auto kept = preserves_parallelism(conjugation(H), model);
    EXPECT_FALSE(kept.preserves);
    EXPECT_NE(kept.diagnostic.find("stays in the defining set"), std::string::npos);
    const auto moved = preserves_parallelism(conjugation(H) * galois_outer(H), model);
    EXPECT_FALSE(moved.preserves);
    EXPECT_EQ(moved.unit_part_kind, MapKind::Antiautomorphism);
    EXPECT_NE(moved.diagnostic.find("complement"), std::string::npos);

    const CliffordLikeParallelism<F2TUField> Psep(C, DefiningSet<F2TUField>{{}, true, false});
    const auto flagged = preserves_parallelism(conjugation(C), ParallelismModel<F2TUField>::of(Psep));
    EXPECT_FALSE(flagged.preserves);
    EXPECT_NE(flagged.diagnostic.find("flagged"), std::string::npos);
}
