#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ss3/count.hpp"

using namespace ss3;

namespace {

ShortCurve random_curve(const FieldContext& ctx, std::mt19937_64& rng)
{
    FieldElement a4 = ctx.random(rng);
    while (a4.is_zero())
        a4 = ctx.random(rng);
    return {a4, ctx.random(rng)};
}

const TraceValue kZero(0), kOne(1), kMinusOne(-1);

} // namespace

TEST(CharSum, ClosedFormExamples)
{
    EXPECT_EQ(s_closed(1, kZero), 0);
    EXPECT_EQ(s_closed(1, kOne), 1);
    EXPECT_EQ(s_closed(1, kMinusOne), -1);
    EXPECT_EQ(s_closed(2, kZero), 2);
    EXPECT_EQ(s_closed(2, kOne), -1);
    EXPECT_EQ(s_closed(3, kOne), -3);
    static_assert(s_closed(5, TraceValue(1)) == 9);
}

TEST(CharSum, ClosedFormIdentities)
{
    for (unsigned d = 1; d <= 64; ++d) {
        const i128 total = s_closed(d, kZero) + s_closed(d, kOne) + s_closed(d, kMinusOne);
        EXPECT_EQ(total, 0) << d; // chi sums to zero over F_q
        if (d % 2 == 1)
            EXPECT_EQ(s_closed(d, kOne), -s_closed(d, kMinusOne)); // chi(-1) = -1
        else
            EXPECT_EQ(s_closed(d, kOne), s_closed(d, kMinusOne));
    }
    EXPECT_EQ(s_closed(64, kOne), pow3(31));
}

TEST(CharSum, BruteExamples)
{
    const auto f3 = FieldContext::make(1);
    EXPECT_EQ(s_brute(*f3, kOne), 1);
    EXPECT_EQ(s_brute(*f3, kMinusOne), -1);
    EXPECT_EQ(s_brute(*FieldContext::make(2), kZero), 2);
}

TEST(CharSum, ClosedMatchesBrute)
{
    for (unsigned d = 1; d <= 8; ++d) {
        const auto ctx = FieldContext::make(d);
        for (const TraceValue a : {kZero, kOne, kMinusOne})
            EXPECT_EQ(s_closed(d, a), s_brute(*ctx, a)) << "d=" << d << " a=" << a.value();
    }
}

TEST(CountTypes, Examples)
{
    const auto f3 = FieldContext::make(1), f9 = FieldContext::make(2);
    EXPECT_EQ(count_type_I(*f3, kOne).order, 7);
    EXPECT_EQ(count_type_I(*f3, kMinusOne).order, 1);
    EXPECT_EQ(count_type_I(*f3, kZero).order, 4);
    EXPECT_EQ(count_type_I(*f9, kZero).order, 16);
    EXPECT_EQ(count_type_II(*f9, kZero).order, 4);
    EXPECT_EQ(count_type_II(*f9, kOne).order, 13);
    EXPECT_EQ(count_trivial_types(*f3, CurveType::I_plus).order, 4);
    EXPECT_EQ(count_trivial_types(*f9, CurveType::IIIa).order, 10);

    const ShortCurve e_ii{-square(f9->beta()), f9->zero()};
    EXPECT_EQ(naive_count(e_ii), 4);
    EXPECT_EQ(naive_count(ShortCurve{-f9->beta(), f9->zero()}), 10);
    EXPECT_EQ(naive_count(ShortCurve{-cube(f9->beta()), f9->zero()}), 10);

    try {
        (void)count_type_II(*f3, kZero);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DParityError);
    }
    for (unsigned d = 2; d <= 40; d += 2) {
        const auto ctx = FieldContext::make(d, std::nullopt, 40);
        const i128 q = ctx->order();
        for (const TraceValue a : {kZero, kOne})
            EXPECT_EQ(count_type_I(*ctx, a).order + count_type_II(*ctx, a).order, 2 * q + 2);
    }
}

TEST(CountSupersingular, Examples)
{
    const auto f3 = FieldContext::make(1), f9 = FieldContext::make(2);
    EXPECT_EQ(count_supersingular({-f3->one(), f3->one()}).order, 7);
    EXPECT_EQ(count_supersingular({-f9->one(), f9->zero()}).order, 16);
    for (int a6 = 0; a6 < 3; ++a6)
        EXPECT_EQ(count_supersingular({f3->one(), f3->from_int(a6)}).order, 4);
    const CountResult r = count_supersingular({-f3->one(), f3->one()});
    EXPECT_EQ(r.q, 3);
    EXPECT_EQ(r.frobenius_trace, -3);
    EXPECT_THROW(count_supersingular({f3->zero(), f3->one()}), Error);
}

TEST(CountSupersingular, ExhaustiveAgainstOracle)
{
    for (unsigned d = 1; d <= 4; ++d) {
        const auto ctx = FieldContext::make(d);
        for (std::uint64_t a4 = 1; a4 < ctx->order(); ++a4)
            for (std::uint64_t a6 = 0; a6 < ctx->order(); ++a6) {
                const ShortCurve e{ctx->from_encoding(a4), ctx->from_encoding(a6)};
                const CountResult c = count_supersingular(e);
                ASSERT_EQ(c.order, naive_count(e)) << format_short_curve(e);
                EXPECT_EQ(c, count_via_classification(e));
                EXPECT_EQ(c.class_used, canonicalize(e).cls);
            }
    }
}

TEST(CountSupersingular, SampledAgainstOracle)
{
    std::mt19937_64 rng(31);
    for (unsigned d = 5; d <= 7; ++d) {
        const auto ctx = FieldContext::make(d);
        for (int i = 0; i < 200; ++i) {
            const ShortCurve e = random_curve(*ctx, rng);
            const CountResult c = count_supersingular(e);
            ASSERT_EQ(c.order, naive_count(e)) << format_short_curve(e);
            EXPECT_EQ(c, count_via_classification(e));
        }
    }
}

TEST(CountSupersingular, OrderAnnihilatesPoints)
{
    std::mt19937_64 rng(32);
    for (unsigned d = 5; d <= 12; ++d) {
        const auto ctx = FieldContext::make(d);
        for (int i = 0; i < 20; ++i) {
            const ShortCurve e = random_curve(*ctx, rng);
            const CountResult c = count_supersingular(e);
            for (int k = 0; k < 5; ++k)
                EXPECT_TRUE(scalar_mul(e, c.order, random_point(e, rng)).is_infinity()) << format_short_curve(e);
        }
    }
}

TEST(CountSupersingular, LargeFieldAnnihilation)
{
    std::mt19937_64 rng(33);
    for (unsigned d : {20u, 31u}) {
        const auto ctx = FieldContext::make(d);
        for (int i = 0; i < 5; ++i) {
            const ShortCurve e = random_curve(*ctx, rng);
            const CountResult c = count_supersingular(e);
            EXPECT_EQ(c, count_via_classification(e));
            for (int k = 0; k < 3; ++k)
                EXPECT_TRUE(scalar_mul(e, c.order, random_point(e, rng)).is_infinity());
        }
    }
}

TEST(CountSupersingular, TwistSumAndSpectrum)
{
    std::mt19937_64 rng(34);
    for (unsigned d = 1; d <= 16; ++d) {
        const auto ctx = FieldContext::make(d);
        const i128 q = ctx->order();
        std::set<i128> allowed{0};
        if (d % 2 == 1) {
            allowed.insert(pow3((d + 1) / 2));
            allowed.insert(-pow3((d + 1) / 2));
        } else {
            for (i128 t : {pow3(d / 2), 2 * pow3(d / 2)}) {
                allowed.insert(t);
                allowed.insert(-t);
            }
        }
        for (int i = 0; i < 50; ++i) {
            const ShortCurve e = random_curve(*ctx, rng);
            const CountResult c = count_supersingular(e);
            EXPECT_TRUE(allowed.count(c.frobenius_trace)) << d;
            EXPECT_EQ(c.order + count_supersingular(quadratic_twist(e, ctx->nonsquare())).order, 2 * q + 2);
        }
    }
}

TEST(CountSupersingular, InvariantUnderIsomorphism)
{
    std::mt19937_64 rng(35);
    for (unsigned d = 1; d <= 12; ++d) {
        const auto ctx = FieldContext::make(d);
        for (int i = 0; i < 30; ++i) {
            const ShortCurve e = random_curve(*ctx, rng);
            FieldElement u = ctx->random(rng);
            while (u.is_zero())
                u = ctx->random(rng);
            const FieldElement r = ctx->random(rng);
            const ShortCurve image{pow(u, 4) * e.a4, pow(u, 6) * e.a6 - r * pow(u, 4) * e.a4 - cube(r)};
            EXPECT_EQ(count_supersingular(image), count_supersingular(e));
        }
    }
}

TEST(CountSupersingular, RootChoiceDoesNotMatter)
{
    std::mt19937_64 rng(36);
    for (unsigned d = 1; d <= 12; ++d) {
        const auto ctx = FieldContext::make(d);
        int used = 0;
        for (int i = 0; i < 200 && used < 20; ++i) {
            const ShortCurve e = random_curve(*ctx, rng);
            if (d % 2 == 1) {
                const auto v = fourth_root(-e.a4);
                if (!v)
                    continue;
                ++used;
                const CountResult base = count_from_fourth_root(e, *v);
                for (const FieldElement& zeta : ctx->fourth_roots_of_unity())
                    EXPECT_EQ(count_from_fourth_root(e, *v * zeta), base);
                EXPECT_THROW(count_from_square_root(e, *v), Error);
            } else {
                const auto g = sqrt(-e.a4);
                if (!g)
                    continue;
                ++used;
                EXPECT_EQ(count_from_square_root(e, *g), count_from_square_root(e, -*g));
                EXPECT_THROW(count_from_fourth_root(e, *g), Error);
            }
        }
        EXPECT_GT(used, 0);
    }
}

TEST(CountGeneral, Examples)
{
    const auto f3 = FieldContext::make(1);
    const auto z = f3->zero(), one = f3->one();
    const GeneralCurve g(z, z, one, one, z);
    EXPECT_EQ(count_general(g).order, 4);
    EXPECT_EQ(count_general(g).order, enumerate_count(g));

    const GeneralCurve ordinary(z, one, z, z, one);
    try {
        (void)count_general(ordinary);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotSupersingular);
    }
    const CountResult fb = count_general(ordinary, true);
    EXPECT_EQ(fb.order, enumerate_count(ordinary));
    EXPECT_FALSE(fb.class_used);
}

TEST(CountGeneral, RandomSupersingularModels)
{
    std::mt19937_64 rng(37);
    for (unsigned d = 1; d <= 4; ++d) {
        const auto ctx = FieldContext::make(d);
        int tested = 0;
        while (tested < 30) {
            const FieldElement a1 = ctx->random(rng), a3 = ctx->random(rng);
            try {
                const GeneralCurve g(a1, -(a1 * a1), a3, ctx->random(rng), ctx->random(rng));
                EXPECT_EQ(count_general(g).order, enumerate_count(g));
                ++tested;
            } catch (const Error& e) {
                EXPECT_EQ(e.code(), Errc::SingularCurve);
            }
        }
    }
}

TEST(ListClasses, Orders)
{
    auto orders = [](unsigned d) {
        const auto ctx = FieldContext::make(d);
        std::vector<i128> out;
        for (const ClassEntry& c : list_classes(*ctx))
            out.push_back(c.count.order);
        return out;
    };
    EXPECT_EQ(orders(1), (std::vector<i128>{4, 7, 1, 4}));
    EXPECT_EQ(orders(2), (std::vector<i128>{16, 7, 4, 13, 10, 10}));
    EXPECT_EQ(orders(3), (std::vector<i128>{28, 19, 37, 28}));
    for (unsigned d = 1; d <= 6; ++d) {
        const auto ctx = FieldContext::make(d);
        for (const ClassEntry& c : list_classes(*ctx))
            EXPECT_EQ(c.count.order, naive_count(c.representative));
    }
}
