#pragma once

// Test-vector records: one row per isomorphism class and, for small fields,
// one row per supersingular curve.

#include <ostream>
#include <string>
#include <vector>

#include "ss3/classify.hpp"
#include "ss3/count.hpp"
#include "ss3/serialize.hpp"

namespace ss3 {

/// Largest d for which export also lists every curve.
inline constexpr unsigned kExportCurvesMaxDegree = 3;

struct VectorRecord {
    enum class Kind { Class, Curve };

    Kind kind;
    ShortCurve curve;
    CurveClass cls;
    CountResult count;
    IsomorphismWitness witness; // from `curve` to its class representative
};

inline VectorRecord make_record(VectorRecord::Kind kind, const ShortCurve& e)
{
    const Canonical c = canonicalize(e);
    return {kind, e, c.cls, count_supersingular(e), c.witness};
}

inline std::vector<VectorRecord> build_records(const FieldContext& ctx)
{
    std::vector<VectorRecord> out;
    for (const ClassEntry& entry : list_classes(ctx))
        out.push_back(make_record(VectorRecord::Kind::Class, entry.representative));
    if (ctx.degree() <= kExportCurvesMaxDegree) {
        for (std::uint64_t a4 = 1; a4 < ctx.order(); ++a4) {
            for (std::uint64_t a6 = 0; a6 < ctx.order(); ++a6)
                out.push_back(make_record(VectorRecord::Kind::Curve,
                                          ShortCurve{ctx.from_encoding(a4), ctx.from_encoding(a6)}));
        }
    }
    return out;
}

namespace detail {

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string modulus_text(const FieldContext& ctx)
{
    std::string s;
    for (std::size_t i = 0; i < ctx.modulus().size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(ctx.modulus()[i]);
    }
    return s;
}

} // namespace detail

inline void write_csv(std::ostream& os, const FieldContext& ctx, const std::vector<VectorRecord>& records)
{
    os << "d,modulus,a4,a6,type,invariant,order,trace,u,r\n";
    const std::string modulus = detail::csv_field(detail::modulus_text(ctx));
    for (const VectorRecord& rec : records) {
        using detail::csv_field;
        os << ctx.degree() << ',' << modulus << ',' << csv_field(format_element(rec.curve.a4)) << ','
           << csv_field(format_element(rec.curve.a6)) << ',' << type_name(rec.cls.type) << ','
           << invariant_label(rec.cls.invariant).value_or("") << ',' << to_string(rec.count.order) << ','
           << to_string(rec.count.frobenius_trace) << ',' << csv_field(format_element(rec.witness.u)) << ','
           << csv_field(format_element(rec.witness.r)) << '\n';
    }
}

inline Json records_json(const FieldContext& ctx, const std::vector<VectorRecord>& records)
{
    Json list = Json::array();
    for (const VectorRecord& rec : records) {
        Json j;
        j["kind"] = rec.kind == VectorRecord::Kind::Class ? "class" : "curve";
        j["d"] = ctx.degree();
        j["modulus"] = ctx.modulus();
        j["beta"] = format_element(ctx.beta());
        j["alpha"] = format_element(ctx.alpha());
        j["a4"] = format_element(rec.curve.a4);
        j["a6"] = format_element(rec.curve.a6);
        j["class"] = class_json(ctx, rec.cls);
        j["order"] = to_string(rec.count.order);
        j["trace"] = to_string(rec.count.frobenius_trace);
        j["witness"] = witness_json(rec.witness);
        list.push_back(std::move(j));
    }
    Json doc;
    doc["context"] = context_json(ctx);
    doc["records"] = std::move(list);
    return doc;
}

} // namespace ss3
