#pragma once

// Weierstrass curves over GF(3^d): the general five-coefficient model, its
// reduction to y^2 = x^3 + a4 x + a6, the affine group law and the
// character-sum point-count oracle.

#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ss3/field.hpp"

namespace ss3 {

/// y^2 = x^3 + a4 x + a6. Nonsingular iff a4 != 0 (discriminant -a4^3).
struct ShortCurve {
    FieldElement a4;
    FieldElement a6;

    const FieldContext& context() const noexcept { return a4.context(); }
    bool is_nonsingular() const noexcept { return !a4.is_zero(); }
    FieldElement rhs(const FieldElement& x) const { return cube(x) + a4 * x + a6; }

    friend bool operator==(const ShortCurve&, const ShortCurve&) = default;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
class GeneralCurve {
public:
    GeneralCurve(FieldElement a1, FieldElement a2, FieldElement a3, FieldElement a4, FieldElement a6)
        : a1_(a1), a2_(a2), a3_(a3), a4_(a4), a6_(a6)
    {
        if (discriminant().is_zero())
            throw Error(Errc::SingularCurve, "discriminant vanishes");
    }

    static GeneralCurve from_short(const ShortCurve& e)
    {
        const FieldElement z = e.context().zero();
        return {z, z, z, e.a4, e.a6};
    }

    const FieldContext& context() const noexcept { return a1_.context(); }
    const FieldElement& a1() const noexcept { return a1_; }
    const FieldElement& a2() const noexcept { return a2_; }
    const FieldElement& a3() const noexcept { return a3_; }
    const FieldElement& a4() const noexcept { return a4_; }
    const FieldElement& a6() const noexcept { return a6_; }

    // Characteristic 3: 4 = 1 and 2 = -1.
    FieldElement b2() const { return a1_ * a1_ + a2_; }
    FieldElement b4() const { return -a4_ + a1_ * a3_; }
    FieldElement b6() const { return a3_ * a3_ + a6_; }
    FieldElement b8() const
    {
        return a1_ * a1_ * a6_ + a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
    }

    /// -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6 reduced mod 3.
    FieldElement discriminant() const
    {
        const FieldElement b2v = b2();
        return -(b2v * b2v * b8()) + cube(b4());
    }

    /// j = c4^3 / discriminant with c4 = b2^2 in characteristic 3.
    FieldElement j_invariant() const { return pow(b2(), 6) / discriminant(); }

    bool on_curve(const FieldElement& x, const FieldElement& y) const
    {
        return y * y + a1_ * x * y + a3_ * y == cube(x) + a2_ * x * x + a4_ * x + a6_;
    }

private:
    FieldElement a1_, a2_, a3_, a4_, a6_;
};

struct ReductionResult {
    ShortCurve short_curve;
    FieldElement b2, b4, b6;
};

/// A curve whose completed-square model keeps an x^2 term; j != 0.
struct NotSupersingular {
    FieldElement b2;
    FieldElement j;
};

/// Completes the square (y -> (y - a1 x - a3)/2), giving
/// y^2 = x^3 + b2 x^2 - b4 x + b6. With b2 = 0 this is the short model
/// (a4, a6) = (-b4, b6).
inline std::variant<ReductionResult, NotSupersingular> reduce(const GeneralCurve& g)
{
    const FieldElement b2 = g.b2();
    if (!b2.is_zero())
        return NotSupersingular{b2, g.j_invariant()};
    const FieldElement b4 = g.b4();
    const FieldElement b6 = g.b6();
    return ReductionResult{ShortCurve{-b4, b6}, b2, b4, b6};
}

/// In characteristic 3 the b2 = 0 models are exactly the supersingular ones:
/// x^3 + a4 x + a6 has no x^2 coefficient, so the Hasse invariant is zero.
inline bool is_supersingular(const GeneralCurve& g) { return g.b2().is_zero(); }

// ---------------------------------------------------------------------------
// Points and the group law

class Point {
public:
    static Point infinity() { return Point(); }

    static Point affine(const ShortCurve& e, const FieldElement& x, const FieldElement& y)
    {
        if (y * y != e.rhs(x))
            throw Error(Errc::PointNotOnCurve, "(" + format_element(x) + ", " + format_element(y) + ")");
        return Point(x, y);
    }

    bool is_infinity() const noexcept { return !x_.has_value(); }
    const FieldElement& x() const { return *x_; }
    const FieldElement& y() const { return *y_; }

    bool on(const ShortCurve& e) const { return is_infinity() || *y_ * *y_ == e.rhs(*x_); }

    friend bool operator==(const Point&, const Point&) = default;

private:
    Point() = default;
    Point(FieldElement x, FieldElement y) : x_(x), y_(y) {}

    friend Point negate(const Point&);
    friend Point add(const ShortCurve&, const Point&, const Point&);
    friend Point double_point(const ShortCurve&, const Point&);

    std::optional<FieldElement> x_;
    std::optional<FieldElement> y_;
};

inline Point negate(const Point& p)
{
    if (p.is_infinity())
        return p;
    return Point(*p.x_, -*p.y_);
}

/// Tangent slope is (3 x^2 + a4) / (2 y) = a4 / (2 y) in characteristic 3.
inline Point double_point(const ShortCurve& e, const Point& p)
{
    if (p.is_infinity() || p.y_->is_zero())
        return Point::infinity();
    const FieldElement& x1 = *p.x_;
    const FieldElement& y1 = *p.y_;
    const FieldElement lambda = e.a4 / (y1 + y1);
    const FieldElement x3 = lambda * lambda - x1 - x1;
    return Point(x3, lambda * (x1 - x3) - y1);
}

inline Point add(const ShortCurve& e, const Point& p, const Point& q)
{
    if (p.is_infinity())
        return q;
    if (q.is_infinity())
        return p;
    if (*p.x_ == *q.x_) {
        if (*p.y_ == *q.y_)
            return double_point(e, p);
        return Point::infinity();
    }
    const FieldElement lambda = (*q.y_ - *p.y_) / (*q.x_ - *p.x_);
    const FieldElement x3 = lambda * lambda - *p.x_ - *q.x_;
    return Point(x3, lambda * (*p.x_ - x3) - *p.y_);
}

/// n P by double-and-add; negative n multiplies -P.
inline Point scalar_mul(const ShortCurve& e, i128 n, const Point& p)
{
    Point base = n < 0 ? negate(p) : p;
    u128 k = n < 0 ? u128(0) - u128(n) : u128(n);
    Point acc = Point::infinity();
    while (k != 0) {
        if (k & 1)
            acc = add(e, acc, base);
        base = double_point(e, base);
        k >>= 1;
    }
    return acc;
}

/// A random affine point: x uniform among those where x^3 + a4 x + a6 is a
/// square, y of random sign. After 64 misses the x-line is scanned from a
/// random offset, so curves with few or no affine points still terminate;
/// the point at infinity is returned when there is no affine point.
template <class Rng>
Point random_point(const ShortCurve& e, Rng& rng)
{
    const FieldContext& ctx = e.context();
    auto lift = [&](const FieldElement& x) -> std::optional<Point> {
        if (auto y = sqrt(e.rhs(x)))
            return Point::affine(e, x, (rng() & 1) ? -*y : *y);
        return std::nullopt;
    };
    for (int attempt = 0; attempt < 64; ++attempt)
        if (auto p = lift(ctx.random(rng)))
            return *p;
    const std::uint64_t start = ctx.random(rng).encoding();
    for (std::uint64_t i = 0; i < ctx.order(); ++i)
        if (auto p = lift(ctx.from_encoding((start + i) % ctx.order())))
            return *p;
    return Point::infinity();
}

// ---------------------------------------------------------------------------
// Brute-force counting

inline constexpr std::uint64_t kDefaultOracleCap = 1'594'323; // 3^13

/// Largest q the oracles will enumerate; SS3_ORACLE_CAP overrides the default.
inline std::uint64_t oracle_cap()
{
    if (const char* env = std::getenv("SS3_ORACLE_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0')
            return v;
    }
    return kDefaultOracleCap;
}

inline void require_oracle_range(const FieldContext& ctx, std::uint64_t cap)
{
    if (ctx.order() > cap)
        throw Error(Errc::OracleTooLarge,
                    "q = " + std::to_string(ctx.order()) + " exceeds oracle cap " + std::to_string(cap));
}

/// Sum of chi over an x-range of the cubic; partial sums over any partition
/// of [0, q) add up to the full sum.
inline long long char_sum(const ShortCurve& e, std::uint64_t begin, std::uint64_t end)
{
    const FieldContext& ctx = e.context();
    long long s = 0;
    for (std::uint64_t code = begin; code < end; ++code)
        s += chi(e.rhs(ctx.from_encoding(code)));
    return s;
}

/// #E(F_q) = q + 1 + sum_x chi(x^3 + a4 x + a6).
inline i128 naive_count(const ShortCurve& e, std::uint64_t cap = oracle_cap())
{
    const FieldContext& ctx = e.context();
    require_oracle_range(ctx, cap);
    return i128(ctx.order()) + 1 + char_sum(e, 0, ctx.order());
}

/// Counts projective points by literally tabulating y^2 for every y.
inline i128 enumerate_count(const ShortCurve& e, std::uint64_t cap = oracle_cap())
{
    const FieldContext& ctx = e.context();
    require_oracle_range(ctx, cap);
    const std::uint64_t q = ctx.order();
    std::vector<std::uint32_t> roots(q, 0);
    for (std::uint64_t y = 0; y < q; ++y) {
        const FieldElement fy = ctx.from_encoding(y);
        ++roots[square(fy).encoding()];
    }
    i128 n = 1;
    for (std::uint64_t x = 0; x < q; ++x)
        n += roots[e.rhs(ctx.from_encoding(x)).encoding()];
    return n;
}

/// Counts points of the general model by checking every (x, y) pair.
inline i128 enumerate_count(const GeneralCurve& g, std::uint64_t cap = oracle_cap())
{
    const FieldContext& ctx = g.context();
    require_oracle_range(ctx, cap);
    const std::uint64_t q = ctx.order();
    i128 n = 1;
    for (std::uint64_t x = 0; x < q; ++x) {
        const FieldElement fx = ctx.from_encoding(x);
        for (std::uint64_t y = 0; y < q; ++y) {
            if (g.on_curve(fx, ctx.from_encoding(y)))
                ++n;
        }
    }
    return n;
}

/// Character-sum count of any nonsingular model via its completed-square cubic
/// x^3 + b2 x^2 - b4 x + b6.
inline i128 naive_count(const GeneralCurve& g, std::uint64_t cap = oracle_cap())
{
    const FieldContext& ctx = g.context();
    require_oracle_range(ctx, cap);
    const FieldElement b2 = g.b2(), b4 = g.b4(), b6 = g.b6();
    long long s = 0;
    for (std::uint64_t code = 0; code < ctx.order(); ++code) {
        const FieldElement x = ctx.from_encoding(code);
        s += chi(cube(x) + b2 * x * x - b4 * x + b6);
    }
    return i128(ctx.order()) + 1 + s;
}

// ---------------------------------------------------------------------------
// Text forms

/// "a4=<elem>;a6=<elem>"; a missing coefficient defaults to 0.
inline ShortCurve parse_short_curve(const FieldContext& ctx, std::string_view text)
{
    ShortCurve e{ctx.zero(), ctx.zero()};
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t semi = text.find(';', start);
        std::string_view part = text.substr(start, semi == std::string_view::npos ? semi : semi - start);
        while (!part.empty() && part.front() == ' ')
            part.remove_prefix(1);
        if (!part.empty()) {
            const std::size_t eq = part.find('=');
            if (eq == std::string_view::npos)
                throw Error(Errc::ParseError, "expected key=value in '" + std::string(part) + "'");
            std::string_view key = part.substr(0, eq);
            while (!key.empty() && key.back() == ' ')
                key.remove_suffix(1);
            const FieldElement v = parse_element(ctx, part.substr(eq + 1));
            if (key == "a4")
                e.a4 = v;
            else if (key == "a6")
                e.a6 = v;
            else
                throw Error(Errc::ParseError, "unknown coefficient '" + std::string(key) + "'");
        }
        if (semi == std::string_view::npos)
            break;
        start = semi + 1;
    }
    return e;
}

inline std::string format_short_curve(const ShortCurve& e)
{
    return "a4=" + format_element(e.a4) + ";a6=" + format_element(e.a6);
}

/// Human-readable equation, e.g. "y^2 = x^3 - x + 1". Coefficients outside
/// F_3 are printed as parenthesised coefficient lists.
inline std::string equation(const ShortCurve& e)
{
    std::string s = "y^2 = x^3";
    auto term = [&](const FieldElement& c, std::string_view mono) {
        if (c.is_zero())
            return;
        const bool prime_field = c.encoding() < 3;
        if (prime_field) {
            s += c.coeff(0) == 1 ? " + " : " - ";
            s += mono.empty() ? std::string("1") : std::string(mono);
        } else {
            s += " + (" + format_element(c) + ")";
            if (!mono.empty())
                s += "*" + std::string(mono);
        }
    };
    term(e.a4, "x");
    term(e.a6, "");
    return s;
}

} // namespace ss3
