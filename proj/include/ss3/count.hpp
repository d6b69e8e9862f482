#pragma once

// Closed-form group orders of supersingular curves over GF(3^d).
//
// Everything reduces to the quadratic character summed over a trace fiber,
//     S_d(a) = sum over x with Tr(x) = a of chi(x),
// since x -> x^3 - x maps F_q three-to-one onto the trace-zero hyperplane and
// so #E = q + 1 + 3 S_d(Tr(b)) for y^2 = x^3 - x + b. All square roots of q
// and 3q are exact powers of three.

#include <optional>
#include <variant>
#include <vector>

#include "ss3/classify.hpp"
#include "ss3/curve.hpp"
#include "ss3/field.hpp"
#include "ss3/int128.hpp"

namespace ss3 {

struct CountResult {
    i128 q = 0;
    i128 order = 0;
    i128 frobenius_trace = 0; // q + 1 - order
    std::optional<CurveClass> class_used;

    friend bool operator==(const CountResult&, const CountResult&) = default;
};

inline CountResult make_count(const FieldContext& ctx, i128 order, std::optional<CurveClass> cls)
{
    const i128 q = ctx.order();
    return {q, order, q + 1 - order, cls};
}

namespace detail {

constexpr i128 sign(unsigned e) noexcept { return e % 2 == 0 ? 1 : -1; }

} // namespace detail

/// S_d(a) in closed form.
constexpr i128 s_closed(unsigned d, TraceValue a) noexcept
{
    using detail::sign;
    if (d % 2 == 1) {
        if (a.is_zero())
            return 0;
        const i128 mag = pow3((d - 1) / 2);
        return a == TraceValue(1) ? sign((d - 1) / 2) * mag : sign((d + 1) / 2) * mag;
    }
    const i128 mag = pow3((d - 2) / 2);
    if (a.is_zero())
        return 2 * sign((d + 2) / 2) * mag;
    return sign(d / 2) * mag;
}

/// S_d(a) by summing chi over the whole trace fiber.
inline i128 s_brute(const FieldContext& ctx, TraceValue a, std::uint64_t cap = oracle_cap())
{
    require_oracle_range(ctx, cap);
    i128 s = 0;
    for (std::uint64_t code = 0; code < ctx.order(); ++code) {
        const FieldElement x = ctx.from_encoding(code);
        if (trace(x) == a)
            s += chi(x);
    }
    return s;
}

/// Order of y^2 = x^3 - x + b given Tr(b).
inline CountResult count_type_I(const FieldContext& ctx, TraceValue trace_b)
{
    using detail::sign;
    const unsigned d = ctx.degree();
    const i128 q = ctx.order();
    i128 order;
    CurveClass cls{CurveType::I, ClassInvariant::Zero};
    if (d % 2 == 1) {
        const i128 root3q = pow3((d + 1) / 2);
        if (trace_b.is_zero()) {
            order = q + 1;
        } else if (trace_b == TraceValue(1)) {
            order = q + 1 + sign((d - 1) / 2) * root3q;
            cls.invariant = ClassInvariant::One;
        } else {
            order = q + 1 - sign((d - 1) / 2) * root3q;
            cls.invariant = ClassInvariant::MinusOne;
        }
    } else {
        const i128 rootq = pow3(d / 2);
        if (trace_b.is_zero()) {
            order = q + 1 - sign(d / 2) * 2 * rootq;
        } else {
            order = q + 1 + sign(d / 2) * rootq;
            cls.invariant = ClassInvariant::Nonzero;
        }
    }
    return make_count(ctx, order, cls);
}

/// Order of a Type II curve (d even) given Tr(b gamma^-3), gamma^2 = -a4 with gamma a non-square.
inline CountResult count_type_II(const FieldContext& ctx, TraceValue trace_b_gamma)
{
    const unsigned d = ctx.degree();
    if (d % 2 == 1)
        throw Error(Errc::DParityError, "Type II curves need even d");
    const i128 q = ctx.order();
    const i128 rootq = pow3(d / 2);
    const i128 s = detail::sign(d / 2);
    if (trace_b_gamma.is_zero())
        return make_count(ctx, q + 1 + s * 2 * rootq, CurveClass{CurveType::II, ClassInvariant::Zero});
    return make_count(ctx, q + 1 - s * rootq, CurveClass{CurveType::II, ClassInvariant::Nonzero});
}

/// Types I+, IIIa and IIIb: x -> x^3 + a4 x is a bijection, so the character sum vanishes.
inline CountResult count_trivial_types(const FieldContext& ctx, CurveType t)
{
    return make_count(ctx, i128(ctx.order()) + 1, CurveClass{t, ClassInvariant::Unit});
}

/// Odd d, -a4 = v^4: the order is read off Tr(a6 v^-6) and d mod 4.
inline CountResult count_from_fourth_root(const ShortCurve& e, const FieldElement& v)
{
    const FieldContext& ctx = e.context();
    const unsigned d = ctx.degree();
    if (d % 2 == 0)
        throw Error(Errc::DParityError, "fourth-root dispatch needs odd d");
    const i128 q = ctx.order();
    const i128 root3q = pow3((d + 1) / 2);
    const TraceValue tr = trace(e.a6 / pow(v, 6));
    const bool d1 = d % 4 == 1;
    if (tr.is_zero())
        return make_count(ctx, q + 1, CurveClass{CurveType::I, ClassInvariant::Zero});
    if (tr == TraceValue(1))
        return make_count(ctx, d1 ? q + 1 + root3q : q + 1 - root3q, CurveClass{CurveType::I, ClassInvariant::One});
    return make_count(ctx, d1 ? q + 1 - root3q : q + 1 + root3q, CurveClass{CurveType::I, ClassInvariant::MinusOne});
}

/// Even d, -a4 = gamma^2: the order is read off Tr(a6 gamma^-3), d mod 4 and
/// whether gamma is itself a square. Either sign of gamma gives the same result.
inline CountResult count_from_square_root(const ShortCurve& e, const FieldElement& gamma)
{
    const FieldContext& ctx = e.context();
    const unsigned d = ctx.degree();
    if (d % 2 == 1)
        throw Error(Errc::DParityError, "square-root dispatch needs even d");
    const i128 q = ctx.order();
    const i128 rootq = pow3(d / 2);
    const bool zero = trace(e.a6 / cube(gamma)).is_zero();
    const bool d0 = d % 4 == 0;
    const ClassInvariant inv = zero ? ClassInvariant::Zero : ClassInvariant::Nonzero;
    if (chi(gamma) == 1) {
        const i128 order = zero ? (d0 ? q + 1 - 2 * rootq : q + 1 + 2 * rootq) : (d0 ? q + 1 + rootq : q + 1 - rootq);
        return make_count(ctx, order, CurveClass{CurveType::I, inv});
    }
    const i128 order = zero ? (d0 ? q + 1 + 2 * rootq : q + 1 - 2 * rootq) : (d0 ? q + 1 - rootq : q + 1 + rootq);
    return make_count(ctx, order, CurveClass{CurveType::II, inv});
}

/// The closed-form dispatch on (a4, a6); no isomorphism witness is built.
/// When -a4 has no fourth root (odd d) or no square root (even d) the
/// character sum vanishes and the order is q + 1.
inline CountResult count_supersingular(const ShortCurve& e)
{
    detail::require_nonsingular(e);
    const FieldContext& ctx = e.context();
    const i128 q = ctx.order();
    const FieldElement m = -e.a4;

    if (ctx.degree() % 2 == 1) {
        if (const auto v = fourth_root(m))
            return count_from_fourth_root(e, *v);
        return make_count(ctx, q + 1, CurveClass{CurveType::I_plus, ClassInvariant::Unit});
    }
    if (const auto gamma = sqrt(m))
        return count_from_square_root(e, *gamma);
    return make_count(ctx, q + 1, CurveClass{curve_type(e), ClassInvariant::Unit});
}

/// Second route: canonicalize, then apply the per-type formula to the class.
inline CountResult count_via_classification(const ShortCurve& e)
{
    const Canonical c = canonicalize(e);
    const FieldContext& ctx = e.context();
    switch (c.cls.type) {
    case CurveType::I:
        return count_type_I(ctx, trace(c.representative.a6));
    case CurveType::II:
        // representative a6 is alpha beta^3 or 0 and gamma = beta there
        return count_type_II(ctx, trace(c.representative.a6 / cube(ctx.beta())));
    default:
        return count_trivial_types(ctx, c.cls.type);
    }
}

/// Reduces a general model and counts it in closed form. Ordinary curves are
/// rejected unless `naive_fallback` is set, in which case they are counted by
/// the character-sum oracle (class_used left empty).
inline CountResult count_general(const GeneralCurve& g, bool naive_fallback = false)
{
    auto reduced = reduce(g);
    if (auto* r = std::get_if<ReductionResult>(&reduced))
        return count_supersingular(r->short_curve);
    const auto& ns = std::get<NotSupersingular>(reduced);
    if (!naive_fallback)
        throw Error(Errc::NotSupersingular, "b2 != 0, j = " + format_element(ns.j));
    return make_count(g.context(), naive_count(g), std::nullopt);
}

struct ClassEntry {
    ShortCurve representative;
    CurveClass cls;
    CountResult count;
};

/// One entry per isomorphism class: 4 for odd d, 6 for even d.
inline std::vector<ClassEntry> list_classes(const FieldContext& ctx)
{
    std::vector<ClassEntry> out;
    for (const CurveClass& cls : all_classes(ctx)) {
        const ShortCurve rep = representative(ctx, cls);
        out.push_back({rep, cls, count_supersingular(rep)});
    }
    return out;
}

} // namespace ss3
