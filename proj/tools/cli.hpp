#pragma once

// Command implementations for the ss3 tool. Kept in a header so the test
// suites can drive the exact same code in-process.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ss3/ss3.hpp"

namespace ss3::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline std::optional<std::vector<int>> parse_modulus(const std::string& text)
{
    if (text.empty())
        return std::nullopt;
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.size() != 1 || item[0] < '0' || item[0] > '2')
            throw Error(Errc::ParseError, "modulus coefficient '" + item + "' is not a base-3 digit");
        out.push_back(item[0] - '0');
    }
    return out;
}

inline FieldContext::Ptr make_context(unsigned d, const std::string& modulus)
{
    return FieldContext::make(d, parse_modulus(modulus));
}

struct CurveArgs {
    std::string a1 = "0", a2 = "0", a3 = "0", a4, a6 = "0";
    std::string curve; // "a4=..;a6=.." or a JSON object
};

inline GeneralCurve general_curve(const FieldContext& ctx, const CurveArgs& a)
{
    if (!a.curve.empty()) {
        const auto first = a.curve.find_first_not_of(" \t");
        if (first != std::string::npos && a.curve[first] == '{')
            return parse_general_curve_json(ctx, a.curve);
        return GeneralCurve::from_short(parse_short_curve(ctx, a.curve));
    }
    if (a.a4.empty())
        throw Error(Errc::ParseError, "--a4 or --curve is required");
    return GeneralCurve(parse_element(ctx, a.a1), parse_element(ctx, a.a2), parse_element(ctx, a.a3),
                        parse_element(ctx, a.a4), parse_element(ctx, a.a6));
}

inline ShortCurve short_curve(const FieldContext& ctx, const CurveArgs& a)
{
    if (!a.curve.empty())
        return parse_short_curve(ctx, a.curve);
    if (a.a4.empty())
        throw Error(Errc::ParseError, "--a4 or --curve is required");
    return {parse_element(ctx, a.a4), parse_element(ctx, a.a6)};
}

inline void add_curve_options(CLI::App* cmd, CurveArgs& a, bool general)
{
    cmd->add_option("--a4", a.a4, "a4 as a base-3 integer or coefficient list c0,c1,...");
    cmd->add_option("--a6", a.a6, "a6 (default 0)");
    if (general) {
        cmd->add_option("--a1", a.a1, "a1 (default 0)");
        cmd->add_option("--a2", a.a2, "a2 (default 0)");
        cmd->add_option("--a3", a.a3, "a3 (default 0)");
        cmd->add_option("--curve", a.curve, "curve as \"a4=<elem>;a6=<elem>\" or a JSON object of a1..a6");
    } else {
        cmd->add_option("--curve", a.curve, "curve as \"a4=<elem>;a6=<elem>\"");
    }
}

inline std::string pad(std::string s, std::size_t width)
{
    if (s.size() < width)
        s.append(width - s.size(), ' ');
    return s;
}

} // namespace detail

inline int cmd_field_info(unsigned d, const std::string& modulus, std::ostream& out)
{
    const auto ctx = detail::make_context(d, modulus);
    out << context_json(*ctx).dump() << '\n';
    return kExitOk;
}

inline int cmd_classify(unsigned d, const std::string& modulus, const detail::CurveArgs& args, std::ostream& out)
{
    const auto ctx = detail::make_context(d, modulus);
    const ShortCurve e = detail::short_curve(*ctx, args);
    const Canonical c = canonicalize(e);
    Json j;
    j["d"] = d;
    j["curve"] = short_curve_json(e);
    j["class"] = class_json(*ctx, c.cls);
    j["representative"] = short_curve_json(c.representative);
    j["witness"] = witness_json(c.witness);
    out << j.dump() << '\n';
    return kExitOk;
}

inline int cmd_count(unsigned d, const std::string& modulus, const detail::CurveArgs& args, bool naive,
                     bool allow_ordinary, std::ostream& out)
{
    const auto ctx = detail::make_context(d, modulus);
    const GeneralCurve g = detail::general_curve(*ctx, args);
    CountResult result;
    if (naive) {
        std::optional<CurveClass> cls;
        const auto reduced = reduce(g);
        if (const auto* r = std::get_if<ReductionResult>(&reduced))
            cls = canonicalize(r->short_curve).cls;
        result = make_count(*ctx, naive_count(g), cls);
    } else {
        result = count_general(g, allow_ordinary);
    }
    out << count_json(*ctx, result).dump() << '\n';
    return kExitOk;
}

inline int cmd_enumerate(unsigned d, const std::string& modulus, bool json, std::ostream& out)
{
    const auto ctx = detail::make_context(d, modulus);
    const auto classes = list_classes(*ctx);
    if (json) {
        Json rows = Json::array();
        for (const ClassEntry& c : classes) {
            Json row;
            row["class"] = class_json(*ctx, c.cls);
            row["representative"] = short_curve_json(c.representative);
            row["count"] = count_json(*ctx, c.count);
            rows.push_back(std::move(row));
        }
        out << Json{{"context", context_json(*ctx)}, {"classes", rows}}.dump() << '\n';
        return kExitOk;
    }
    out << "d=" << d << " q=" << ctx->order() << " beta=" << format_element(ctx->beta())
        << " alpha=" << format_element(ctx->alpha()) << '\n';
    using detail::pad;
    out << pad("type", 6) << pad("invariant", 11) << pad("order", 22) << pad("trace", 22) << "representative\n";
    for (const ClassEntry& c : classes) {
        out << pad(std::string(type_name(c.cls.type)), 6) << pad(invariant_label(c.cls.invariant).value_or("-"), 11)
            << pad(to_string(c.count.order), 22) << pad(to_string(c.count.frobenius_trace), 22)
            << equation(c.representative) << '\n';
    }
    return kExitOk;
}

inline int cmd_verify(const VerifyOptions& options, std::ostream& out)
{
    const VerifyReport report = run_verify(options);
    out << report.text();
    return report.passed() ? kExitOk : kExitVerifyFailed;
}

inline int cmd_export(unsigned d, const std::string& modulus, const std::string& format, const std::string& path,
                      std::ostream& out)
{
    const auto ctx = detail::make_context(d, modulus);
    const auto records = build_records(*ctx);
    std::ostringstream buf;
    if (format == "csv")
        write_csv(buf, *ctx, records);
    else
        buf << records_json(*ctx, records).dump(2) << '\n';
    if (path.empty() || path == "-") {
        out << buf.str();
    } else {
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw Error(Errc::ParseError, "cannot open " + path + " for writing");
        f << buf.str();
    }
    return kExitOk;
}

/// Faulty counter used to demonstrate that `verify` catches a wrong formula:
/// the two nonzero-trace Type I cases are swapped.
inline CountResult corrupted_count(const ShortCurve& e)
{
    CountResult c = count_supersingular(e);
    if (c.class_used && c.class_used->type == CurveType::I && c.class_used->invariant != ClassInvariant::Zero) {
        c.order = 2 * (c.q + 1) - c.order;
        c.frobenius_trace = -c.frobenius_trace;
    }
    return c;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Supersingular elliptic curves over GF(3^d): classification and closed-form point counts", "ss3"};
    app.require_subcommand(1);

    unsigned d = 0;
    std::string modulus;
    detail::CurveArgs curve;
    bool naive = false, allow_ordinary = false, json = false, corrupt = false;
    VerifyOptions vopt;
    std::string format = "json", out_path;

    auto* info = app.add_subcommand("field-info", "Print the field model for GF(3^d) as JSON");
    info->add_option("d", d, "extension degree")->required();
    info->add_option("--modulus", modulus, "irreducible modulus c0,...,cd (monic)");

    auto* classify = app.add_subcommand("classify", "Isomorphism class, representative and witness");
    classify->add_option("--d", d, "extension degree")->required();
    classify->add_option("--modulus", modulus, "irreducible modulus c0,...,cd (monic)");
    detail::add_curve_options(classify, curve, false);

    auto* count = app.add_subcommand("count", "Group order in closed form");
    count->add_option("--d", d, "extension degree")->required();
    count->add_option("--modulus", modulus, "irreducible modulus c0,...,cd (monic)");
    detail::add_curve_options(count, curve, true);
    count->add_flag("--naive", naive, "count with the character-sum oracle instead");
    count->add_flag("--allow-ordinary", allow_ordinary, "fall back to the oracle for ordinary curves");

    auto* enumerate = app.add_subcommand("enumerate", "List every isomorphism class with its order");
    enumerate->add_option("--d", d, "extension degree")->required();
    enumerate->add_option("--modulus", modulus, "irreducible modulus c0,...,cd (monic)");
    enumerate->add_flag("--json", json, "machine-readable output");

    auto* verify = app.add_subcommand("verify", "Run the oracle and property suites");
    verify->add_option("--d-max", vopt.d_max, "largest extension degree")->check(CLI::Range(1u, kDefaultDegreeCap));
    verify->add_option("--samples", vopt.samples, "random curves per sampled degree");
    verify->add_option("--seed", vopt.seed, "RNG seed");
    verify->add_flag("--inject-fault", corrupt, "use a deliberately wrong counting formula")->group("");

    auto* exporter = app.add_subcommand("export", "Write test vectors for every class (and every curve for d <= 3)");
    exporter->add_option("--d", d, "extension degree")->required();
    exporter->add_option("--modulus", modulus, "irreducible modulus c0,...,cd (monic)");
    exporter->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    exporter->add_option("--out", out_path, "output file (default stdout)");

    std::vector<const char*> argv{"ss3"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*info)
            return cmd_field_info(d, modulus, out);
        if (*classify)
            return cmd_classify(d, modulus, curve, out);
        if (*count)
            return cmd_count(d, modulus, curve, naive, allow_ordinary, out);
        if (*enumerate)
            return cmd_enumerate(d, modulus, json, out);
        if (*verify) {
            if (corrupt)
                vopt.counter = corrupted_count;
            return cmd_verify(vopt, out);
        }
        if (*exporter)
            return cmd_export(d, modulus, format, out_path, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace ss3::cli
