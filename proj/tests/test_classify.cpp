#include <gtest/gtest.h>

#include <map>
#include <random>
#include <vector>

#include "ss3/classify.hpp"

using namespace ss3;

namespace {

ShortCurve random_curve(const FieldContext& ctx, std::mt19937_64& rng)
{
    FieldElement a4 = ctx.random(rng);
    while (a4.is_zero())
        a4 = ctx.random(rng);
    return {a4, ctx.random(rng)};
}

std::vector<ShortCurve> all_curves(const FieldContext& ctx)
{
    std::vector<ShortCurve> out;
    for (std::uint64_t a4 = 1; a4 < ctx.order(); ++a4)
        for (std::uint64_t a6 = 0; a6 < ctx.order(); ++a6)
            out.push_back({ctx.from_encoding(a4), ctx.from_encoding(a6)});
    return out;
}

// Coset of x in F_q^x / (F_q^x)^4 by discrete log against the primitive root.
unsigned log_mod4(const FieldElement& x)
{
    const FieldContext& ctx = x.context();
    FieldElement p = ctx.one();
    for (unsigned k = 0; k < ctx.order() - 1; ++k, p *= ctx.beta())
        if (p == x)
            return k % 4;
    ADD_FAILURE() << "no discrete log";
    return 0;
}

// Checks the witness algebraically and on every point of the target (up to `limit`).
void expect_sound(const ShortCurve& source, const ShortCurve& target, const IsomorphismWitness& w, int limit = 10)
{
    ASSERT_TRUE(witness_holds(source, target, w));
    const FieldContext& ctx = source.context();
    int mapped = 0;
    for (std::uint64_t x = 0; x < ctx.order() && mapped < limit; ++x) {
        const FieldElement fx = ctx.from_encoding(x);
        const auto y = sqrt(target.rhs(fx));
        if (!y)
            continue;
        const Point p = Point::affine(target, fx, *y);
        EXPECT_TRUE(map_point(source, w, p).on(source));
        ++mapped;
    }
}

} // namespace

TEST(CurveType, Examples)
{
    const auto f3 = FieldContext::make(1);
    EXPECT_EQ(curve_type({-f3->one(), f3->zero()}), CurveType::I);
    EXPECT_EQ(curve_type({f3->one(), f3->zero()}), CurveType::I_plus);
    const auto f9 = FieldContext::make(2);
    EXPECT_EQ(curve_type({f9->from_coeffs({0, 1}), f9->zero()}), CurveType::II);
    try {
        (void)curve_type({f3->zero(), f3->one()});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::InvalidCurve);
    }
}

TEST(CurveType, AgreesWithDiscreteLog)
{
    for (unsigned d = 1; d <= 6; ++d) {
        const auto ctx = FieldContext::make(d);
        std::map<CurveType, int> seen;
        for (std::uint64_t a4 = 1; a4 < ctx->order(); ++a4) {
            const ShortCurve e{ctx->from_encoding(a4), ctx->zero()};
            const unsigned k = log_mod4(-e.a4);
            CurveType want;
            if (d % 2 == 1)
                want = k % 2 == 0 ? CurveType::I : CurveType::I_plus;
            else
                want = k == 0 ? CurveType::I : k == 2 ? CurveType::II : k == 1 ? CurveType::IIIa : CurveType::IIIb;
            EXPECT_EQ(curve_type(e), want) << d << " " << a4;
            ++seen[want];
        }
        EXPECT_EQ(seen.size(), d % 2 == 1 ? 2u : 4u);
    }
}

TEST(Canonicalize, Examples)
{
    const auto f3 = FieldContext::make(1);
    const auto one = f3->one();

    const Canonical a = canonicalize({-one, one});
    EXPECT_EQ(a.cls, (CurveClass{CurveType::I, ClassInvariant::One}));
    EXPECT_EQ(a.representative, (ShortCurve{-one, one}));
    EXPECT_EQ(a.witness, (IsomorphismWitness{one, f3->zero()}));

    const Canonical b = canonicalize({one, f3->from_int(2)});
    EXPECT_EQ(b.cls.type, CurveType::I_plus);
    EXPECT_EQ(b.representative, (ShortCurve{one, f3->zero()}));
    EXPECT_EQ(b.witness, (IsomorphismWitness{one, f3->from_int(2)}));

    const auto f9 = FieldContext::make(2);
    const Canonical c = canonicalize({-f9->one(), f9->from_coeffs({0, 1})});
    EXPECT_EQ(c.cls, (CurveClass{CurveType::I, ClassInvariant::Zero}));
    EXPECT_EQ(c.representative, (ShortCurve{-f9->one(), f9->zero()}));
    expect_sound({-f9->one(), f9->from_coeffs({0, 1})}, c.representative, c.witness);
}

TEST(Isomorphic, Examples)
{
    const auto f3 = FieldContext::make(1);
    const ShortCurve e1{-f3->one(), f3->one()}, e2{-f3->one(), f3->from_int(2)};
    EXPECT_EQ(isomorphic(e1, e1), (IsomorphismWitness{f3->one(), f3->zero()}));
    EXPECT_FALSE(isomorphic(e1, e2));

    const auto f9 = FieldContext::make(2);
    const FieldElement b = f9->one();
    const ShortCurve pos{-f9->one(), b}, neg{-f9->one(), -b};
    const auto w = isomorphic(pos, neg);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->u, *f9->tau());
    EXPECT_EQ(w->u, f9->from_coeffs({0, 1}));
    expect_sound(pos, neg, *w);
}

TEST(Twist, Examples)
{
    const auto f3 = FieldContext::make(1);
    const ShortCurve e{-f3->one(), f3->one()};
    const FieldElement g = f3->from_int(2);
    EXPECT_EQ(quadratic_twist(e, g), (ShortCurve{-f3->one(), f3->from_int(2)}));
    EXPECT_TRUE(isomorphic(quadratic_twist(quadratic_twist(e, g), g), e));
    EXPECT_THROW(quadratic_twist(e, f3->one()), Error);

    const auto f9 = FieldContext::make(2);
    const ShortCurve e0{-f9->one(), f9->zero()};
    EXPECT_EQ(curve_type(quadratic_twist(e0, f9->beta())), CurveType::II);

    std::mt19937_64 rng(21);
    for (unsigned d = 1; d <= 5; ++d) {
        const auto ctx = FieldContext::make(d);
        for (int i = 0; i < 30; ++i) {
            const ShortCurve c = random_curve(*ctx, rng);
            FieldElement h = ctx->random(rng);
            while (chi(h) != -1)
                h = ctx->random(rng);
            EXPECT_TRUE(isomorphic(quadratic_twist(quadratic_twist(c, h), h), c));
            EXPECT_TRUE(isomorphic(quadratic_twist(c, h), quadratic_twist(c, ctx->nonsquare())));
        }
    }
}

TEST(Representatives, MatchTheirClasses)
{
    for (unsigned d = 1; d <= 8; ++d) {
        const auto ctx = FieldContext::make(d);
        const auto classes = all_classes(*ctx);
        EXPECT_EQ(classes.size(), d % 2 == 1 ? 4u : 6u);
        for (const CurveClass& cls : classes) {
            const ShortCurve rep = representative(*ctx, cls);
            const Canonical c = canonicalize(rep);
            EXPECT_EQ(c.cls, cls) << d;
            EXPECT_EQ(c.representative, rep);
        }
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (std::size_t j = 0; j < classes.size(); ++j)
                EXPECT_EQ(isomorphic(representative(*ctx, classes[i]), representative(*ctx, classes[j])).has_value(),
                          i == j);
    }
}

TEST(Classification, ExhaustiveSmallFields)
{
    // Every curve lands in exactly one class, its witness is sound, and the
    // class agrees with an orbit computation done by brute force over (u, r).
    for (unsigned d = 1; d <= 3; ++d) {
        const auto ctx = FieldContext::make(d);
        const auto classes = all_classes(*ctx);
        std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> orbit_of;
        for (std::size_t i = 0; i < classes.size(); ++i) {
            const ShortCurve rep = representative(*ctx, classes[i]);
            for (std::uint64_t u = 1; u < ctx->order(); ++u)
                for (std::uint64_t r = 0; r < ctx->order(); ++r) {
                    const FieldElement fu = ctx->from_encoding(u), fr = ctx->from_encoding(r);
                    // source = image of rep under (u, r): a4 = u^4 a4', a6 = u^6 a6' - r a4 - r^3
                    const FieldElement a4 = pow(fu, 4) * rep.a4;
                    const FieldElement a6 = pow(fu, 6) * rep.a6 - fr * a4 - cube(fr);
                    const auto key = std::make_pair(a4.encoding(), a6.encoding());
                    const auto [it, inserted] = orbit_of.emplace(key, i);
                    EXPECT_EQ(it->second, i) << "orbits overlap";
                }
        }
        const auto curves = all_curves(*ctx);
        EXPECT_EQ(orbit_of.size(), curves.size());
        for (const ShortCurve& e : curves) {
            const Canonical c = canonicalize(e);
            const auto key = std::make_pair(e.a4.encoding(), e.a6.encoding());
            ASSERT_TRUE(orbit_of.count(key));
            EXPECT_EQ(c.cls, classes[orbit_of[key]]) << format_short_curve(e);
            expect_sound(e, c.representative, c.witness, 1000);
        }
    }
}

TEST(Classification, SampledD4)
{
    const auto ctx = FieldContext::make(4);
    std::mt19937_64 rng(22);
    const auto classes = all_classes(*ctx);
    for (int i = 0; i < 400; ++i) {
        const ShortCurve e = random_curve(*ctx, rng);
        const Canonical c = canonicalize(e);
        expect_sound(e, c.representative, c.witness);
        int hits = 0;
        for (const CurveClass& cls : classes)
            hits += isomorphic(e, representative(*ctx, cls)).has_value();
        EXPECT_EQ(hits, 1);
    }
}

TEST(Classification, RootInvariance)
{
    std::mt19937_64 rng(23);
    for (unsigned d = 1; d <= 8; ++d) {
        const auto ctx = FieldContext::make(d);
        for (int i = 0; i < 40; ++i) {
            const ShortCurve e = random_curve(*ctx, rng);
            const CurveType t = curve_type(e);
            const auto v = fourth_root(e.a4 / representative_a4(*ctx, t));
            ASSERT_TRUE(v);
            const CurveClass base = class_for_root(e, t, *v);
            for (const FieldElement& zeta : ctx->fourth_roots_of_unity())
                EXPECT_EQ(class_for_root(e, t, *v * zeta), base);
        }
    }
}

TEST(Classification, TypeStableUnderIsomorphism)
{
    std::mt19937_64 rng(24);
    for (unsigned d = 1; d <= 8; ++d) {
        const auto ctx = FieldContext::make(d);
        for (int i = 0; i < 40; ++i) {
            const ShortCurve e = random_curve(*ctx, rng);
            FieldElement u = ctx->random(rng);
            while (u.is_zero())
                u = ctx->random(rng);
            const FieldElement r = ctx->random(rng);
            const ShortCurve image{pow(u, 4) * e.a4, pow(u, 6) * e.a6 - r * pow(u, 4) * e.a4 - cube(r)};
            EXPECT_TRUE(witness_holds(image, e, {u, r}));
            EXPECT_EQ(curve_type(image), curve_type(e));
            EXPECT_EQ(canonicalize(image).cls, canonicalize(e).cls);
        }
    }
}

TEST(Witness, EquivalenceRelation)
{
    std::mt19937_64 rng(25);
    int pairs = 0;
    for (unsigned d = 1; d <= 4; ++d) {
        const auto ctx = FieldContext::make(d);
        for (int i = 0; i < 250; ++i) {
            const ShortCurve e1 = random_curve(*ctx, rng);
            // e2, e3 built from e1 by random changes of variables
            auto image = [&](const ShortCurve& e) {
                FieldElement u = ctx->random(rng);
                while (u.is_zero())
                    u = ctx->random(rng);
                const FieldElement r = ctx->random(rng);
                const FieldElement ui = inv(u);
                return ShortCurve{e.a4 * pow(ui, 4), (e.a6 + r * e.a4 + cube(r)) * pow(ui, 6)};
            };
            const ShortCurve e2 = image(e1), e3 = image(e2);

            const auto w11 = isomorphic(e1, e1);
            ASSERT_TRUE(w11);
            EXPECT_TRUE(witness_holds(e1, e1, *w11));

            const auto w12 = isomorphic(e1, e2), w23 = isomorphic(e2, e3), w21 = isomorphic(e2, e1);
            ASSERT_TRUE(w12 && w23 && w21);
            expect_sound(e1, e2, *w12);
            expect_sound(e2, e1, invert(*w12));
            expect_sound(e1, e3, compose(*w12, *w23));
            EXPECT_TRUE(isomorphic(e1, e3));
            ++pairs;
        }
    }
    EXPECT_EQ(pairs, 1000);
}

TEST(Labels, Names)
{
    EXPECT_EQ(type_name(CurveType::I_plus), "I+");
    EXPECT_EQ(type_name(CurveType::IIIb), "IIIb");
    EXPECT_EQ(invariant_label(ClassInvariant::MinusOne), "-1");
    EXPECT_EQ(invariant_label(ClassInvariant::Nonzero), "nonzero");
    EXPECT_FALSE(invariant_label(ClassInvariant::Unit));
}
