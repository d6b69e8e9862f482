#pragma once

// Isomorphism classification of supersingular curves y^2 = x^3 + a4 x + a6
// over GF(3^d).
//
// The coset of -a4 in F_q^x / (F_q^x)^4 fixes the curve type. Within a type
// the class is pinned by the trace of a normalised a6. Isomorphisms are
// (x, y) = (u^2 x' + r, u^3 y'), subject to
//     u^4 a4' = a4,    u^6 a6' = a6 + r a4 + r^3.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ss3/curve.hpp"
#include "ss3/field.hpp"

namespace ss3 {

enum class CurveType { I, I_plus, II, IIIa, IIIb };

/// Unit marks the types that form a single class.
enum class ClassInvariant { Unit, Zero, One, MinusOne, Nonzero };

struct CurveClass {
    CurveType type = CurveType::I;
    ClassInvariant invariant = ClassInvariant::Unit;

    friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

struct IsomorphismWitness {
    FieldElement u;
    FieldElement r;

    friend bool operator==(const IsomorphismWitness&, const IsomorphismWitness&) = default;
};

constexpr std::string_view type_name(CurveType t) noexcept
{
    switch (t) {
    case CurveType::I: return "I";
    case CurveType::I_plus: return "I+";
    case CurveType::II: return "II";
    case CurveType::IIIa: return "IIIa";
    case CurveType::IIIb: return "IIIb";
    }
    return "?";
}

/// "0", "1", "-1", "nonzero"; nothing for single-class types.
inline std::optional<std::string> invariant_label(ClassInvariant v)
{
    switch (v) {
    case ClassInvariant::Zero: return "0";
    case ClassInvariant::One: return "1";
    case ClassInvariant::MinusOne: return "-1";
    case ClassInvariant::Nonzero: return "nonzero";
    case ClassInvariant::Unit: break;
    }
    return std::nullopt;
}

namespace detail {

inline void require_nonsingular(const ShortCurve& e)
{
    if (!e.is_nonsingular())
        throw Error(Errc::InvalidCurve, "a4 = 0, discriminant -a4^3 vanishes");
}

} // namespace detail

inline CurveType curve_type(const ShortCurve& e)
{
    detail::require_nonsingular(e);
    const FieldContext& ctx = e.context();
    const FieldElement m = -e.a4;
    if (ctx.degree() % 2 == 1)
        return is_fourth_power(m) ? CurveType::I : CurveType::I_plus;
    if (is_fourth_power(m))
        return CurveType::I;
    if (chi(m) == 1)
        return CurveType::II;
    const FieldElement& beta = ctx.beta();
    if (is_fourth_power(m / beta))
        return CurveType::IIIa;
    if (is_fourth_power(m / cube(beta)))
        return CurveType::IIIb;
    throw std::logic_error("-a4 lies in no fourth-power coset");
}

/// The a4 of the representative for each type: -1, 1, -beta^2, -beta, -beta^3.
inline FieldElement representative_a4(const FieldContext& ctx, CurveType t)
{
    const FieldElement& beta = ctx.beta();
    switch (t) {
    case CurveType::I: return -ctx.one();
    case CurveType::I_plus: return ctx.one();
    case CurveType::II: return -(beta * beta);
    case CurveType::IIIa: return -beta;
    case CurveType::IIIb: return -cube(beta);
    }
    throw std::logic_error("bad curve type");
}

/// The class representative exactly as listed by the classification:
/// E_0, E_alpha, y^2 = x^3 - x - alpha, y^2 = x^3 + x, y^2 = x^3 - beta^2 x (+ alpha beta^3),
/// y^2 = x^3 - beta x and y^2 = x^3 - beta^3 x.
inline ShortCurve representative(const FieldContext& ctx, const CurveClass& cls)
{
    const FieldElement a4 = representative_a4(ctx, cls.type);
    FieldElement a6 = ctx.zero();
    switch (cls.invariant) {
    case ClassInvariant::One:
    case ClassInvariant::Nonzero:
        a6 = ctx.alpha();
        break;
    case ClassInvariant::MinusOne:
        a6 = -ctx.alpha();
        break;
    default:
        break;
    }
    if (cls.type == CurveType::II)
        a6 *= cube(ctx.beta());
    return {a4, a6};
}

/// Class of e when u (any u with u^4 = a4 / a4_rep) is used to normalise a6.
/// The result does not depend on which fourth root is passed.
inline CurveClass class_for_root(const ShortCurve& e, CurveType t, const FieldElement& u)
{
    const FieldContext& ctx = e.context();
    const FieldElement b = e.a6 / pow(u, 6);
    const bool odd = ctx.degree() % 2 == 1;
    switch (t) {
    case CurveType::I: {
        const TraceValue tr = trace(b);
        if (tr.is_zero())
            return {t, ClassInvariant::Zero};
        if (!odd)
            return {t, ClassInvariant::Nonzero};
        return {t, tr == TraceValue(1) ? ClassInvariant::One : ClassInvariant::MinusOne};
    }
    case CurveType::II:
        return {t, trace(b / cube(ctx.beta())).is_zero() ? ClassInvariant::Zero : ClassInvariant::Nonzero};
    default:
        return {t, ClassInvariant::Unit};
    }
}

/// Witness that e1 and e2 are isomorphic, in the orientation
/// u^4 a4(e2) = a4(e1), u^6 a6(e2) = a6(e1) + r a4(e1) + r^3.
/// Fourth roots u are tried in encoding order and the first one admitting a
/// solution r of the linearized equation wins.
inline std::optional<IsomorphismWitness> isomorphic(const ShortCurve& e1, const ShortCurve& e2)
{
    detail::require_nonsingular(e1);
    detail::require_nonsingular(e2);
    if (&e1.context() != &e2.context())
        throw Error(Errc::ContextMismatch, "curves over different field contexts");
    const auto v = fourth_root(e1.a4 / e2.a4);
    if (!v)
        return std::nullopt;
    std::vector<FieldElement> candidates;
    for (const FieldElement& zeta : e1.context().fourth_roots_of_unity())
        candidates.push_back(*v * zeta);
    std::sort(candidates.begin(), candidates.end(), encoding_less);
    for (const FieldElement& u : candidates) {
        const FieldElement k = e1.a6 - pow(u, 6) * e2.a6;
        if (auto r = solve_linearized(e1.a4, k))
            return IsomorphismWitness{u, *r};
    }
    return std::nullopt;
}

inline bool witness_holds(const ShortCurve& source, const ShortCurve& target, const IsomorphismWitness& w)
{
    if (w.u.is_zero())
        return false;
    return pow(w.u, 4) * target.a4 == source.a4 &&
           pow(w.u, 6) * target.a6 == source.a6 + w.r * source.a4 + cube(w.r);
}

/// Carries a point of the target model to the source model.
inline Point map_point(const ShortCurve& source, const IsomorphismWitness& w, const Point& p)
{
    if (p.is_infinity())
        return p;
    return Point::affine(source, w.u * w.u * p.x() + w.r, cube(w.u) * p.y());
}

/// Witness for the reverse direction.
inline IsomorphismWitness invert(const IsomorphismWitness& w)
{
    const FieldElement ui = inv(w.u);
    return {ui, -(w.r * ui * ui)};
}

/// first: e1 -> e2, second: e2 -> e3; result: e1 -> e3.
inline IsomorphismWitness compose(const IsomorphismWitness& first, const IsomorphismWitness& second)
{
    return {first.u * second.u, first.u * first.u * second.r + first.r};
}

struct Canonical {
    ShortCurve representative;
    CurveClass cls;
    IsomorphismWitness witness; // from the input curve to the representative
};

inline Canonical canonicalize(const ShortCurve& e)
{
    const CurveType t = curve_type(e);
    const FieldContext& ctx = e.context();
    const auto u = fourth_root(e.a4 / representative_a4(ctx, t));
    if (!u)
        throw std::logic_error("type coset admits no fourth root");
    const CurveClass cls = class_for_root(e, t, *u);
    const ShortCurve rep = representative(ctx, cls);
    auto w = isomorphic(e, rep);
    if (!w)
        throw std::logic_error("no witness to the class representative of " + format_short_curve(e));
    return {rep, cls, *w};
}

/// (a4 g^2, a6 g^3) for a non-square g.
inline ShortCurve quadratic_twist(const ShortCurve& e, const FieldElement& g)
{
    if (chi(g) != -1)
        throw Error(Errc::NotANonSquare, format_element(g) + " is not a non-square");
    const FieldElement g2 = g * g;
    return {e.a4 * g2, e.a6 * g2 * g};
}

/// Every class in output order: I, I+, II, IIIa, IIIb; within a type by invariant 0, 1, -1.
inline std::vector<CurveClass> all_classes(const FieldContext& ctx)
{
    using C = ClassInvariant;
    if (ctx.degree() % 2 == 1) {
        return {{CurveType::I, C::Zero},
                {CurveType::I, C::One},
                {CurveType::I, C::MinusOne},
                {CurveType::I_plus, C::Unit}};
    }
    return {{CurveType::I, C::Zero},  {CurveType::I, C::Nonzero},  {CurveType::II, C::Zero},
            {CurveType::II, C::Nonzero}, {CurveType::IIIa, C::Unit}, {CurveType::IIIb, C::Unit}};
}

} // namespace ss3
