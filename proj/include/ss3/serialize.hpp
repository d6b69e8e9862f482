#pragma once

// JSON forms of contexts, curves, class labels and counts.

#include <string>

#include "json.hpp"

#include "ss3/classify.hpp"
#include "ss3/count.hpp"
#include "ss3/curve.hpp"
#include "ss3/field.hpp"

namespace ss3 {

using Json = nlohmann::ordered_json;

/// {"d", "modulus": [c0..cd], "beta", "alpha", "tau" | null}
inline Json context_json(const FieldContext& ctx)
{
    Json j;
    j["d"] = ctx.degree();
    j["modulus"] = ctx.modulus();
    j["beta"] = format_element(ctx.beta());
    j["alpha"] = format_element(ctx.alpha());
    j["tau"] = ctx.tau() ? Json(format_element(*ctx.tau())) : Json(nullptr);
    return j;
}

/// {"type", "invariant" | null, "beta"}; the label is only meaningful with the beta it was computed under.
inline Json class_json(const FieldContext& ctx, const CurveClass& cls)
{
    Json j;
    j["type"] = std::string(type_name(cls.type));
    const auto inv = invariant_label(cls.invariant);
    j["invariant"] = inv ? Json(*inv) : Json(nullptr);
    j["beta"] = format_element(ctx.beta());
    return j;
}

inline Json count_json(const FieldContext& ctx, const CountResult& c)
{
    Json j;
    j["q"] = to_string(c.q);
    j["order"] = to_string(c.order);
    j["trace"] = to_string(c.frobenius_trace);
    j["class"] = c.class_used ? class_json(ctx, *c.class_used) : Json(nullptr);
    return j;
}

inline Json witness_json(const IsomorphismWitness& w)
{
    return Json{{"u", format_element(w.u)}, {"r", format_element(w.r)}};
}

inline Json short_curve_json(const ShortCurve& e)
{
    return Json{{"a4", format_element(e.a4)}, {"a6", format_element(e.a6)}, {"equation", equation(e)}};
}

/// {"a1":..,"a2":..,"a3":..,"a4":..,"a6":..}; absent coefficients are 0. Values
/// are element strings (either text form) or non-negative integer encodings.
inline GeneralCurve parse_general_curve_json(const FieldContext& ctx, const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::ParseError, e.what());
    }
    if (!j.is_object())
        throw Error(Errc::ParseError, "curve JSON must be an object");
    auto coeff = [&](const char* key) {
        if (!j.contains(key))
            return ctx.zero();
        const Json& v = j[key];
        if (v.is_string())
            return parse_element(ctx, v.get<std::string>());
        if (v.is_number_unsigned())
            return ctx.from_encoding(v.get<std::uint64_t>());
        throw Error(Errc::ParseError, std::string("bad value for ") + key);
    };
    for (const auto& [key, _] : j.items()) {
        if (key != "a1" && key != "a2" && key != "a3" && key != "a4" && key != "a6")
            throw Error(Errc::ParseError, "unknown coefficient '" + key + "'");
    }
    return GeneralCurve(coeff("a1"), coeff("a2"), coeff("a3"), coeff("a4"), coeff("a6"));
}

} // namespace ss3
