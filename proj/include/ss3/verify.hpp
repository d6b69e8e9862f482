#pragma once

// Self-check suites behind `ss3 verify`. The report text depends only on the
// options, so two runs with the same seed are byte-identical.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ss3/classify.hpp"
#include "ss3/count.hpp"
#include "ss3/curve.hpp"
#include "ss3/field.hpp"

namespace ss3 {

struct VerifyOptions {
    unsigned d_max = 4;
    unsigned samples = 200;
    std::uint64_t seed = 0;
    /// The closed-form counter under test; replaceable so the suites can be shown to fail.
    std::function<CountResult(const ShortCurve&)> counter = count_supersingular;
};

struct SuiteResult {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    void record(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok && failures++ == 0)
            first_failure = what;
    }
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<SuiteResult> suites;

    bool passed() const
    {
        return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failures == 0; });
    }

    std::string text() const
    {
        std::string out = "ss3 verify: d-max=" + std::to_string(options.d_max) +
                          " samples=" + std::to_string(options.samples) + " seed=" + std::to_string(options.seed) +
                          "\n";
        const SuiteResult* first_bad = nullptr;
        for (const SuiteResult& s : suites) {
            char line[128];
            std::snprintf(line, sizeof line, "  %-18s %8llu checks %6llu failures  %s\n", s.name.c_str(),
                          static_cast<unsigned long long>(s.checks), static_cast<unsigned long long>(s.failures),
                          s.failures ? "FAIL" : "PASS");
            out += line;
            if (s.failures) {
                out += "    first failure: " + s.first_failure + "\n";
                if (!first_bad)
                    first_bad = &s;
            }
        }
        if (first_bad)
            out += "result: FAIL (" + first_bad->name + ": " + first_bad->first_failure + ")\n";
        else
            out += "result: PASS\n";
        return out;
    }
};

namespace detail {

inline std::string describe(const ShortCurve& e)
{
    return "d=" + std::to_string(e.context().degree()) + " a4=" + format_element(e.a4) +
           " a6=" + format_element(e.a6);
}

inline bool in_spectrum(unsigned d, i128 t)
{
    if (t % 3 != 0)
        return false;
    if (t == 0)
        return true;
    const i128 a = t < 0 ? -t : t;
    if (d % 2 == 1)
        return a == pow3((d + 1) / 2);
    return a == pow3(d / 2) || a == 2 * pow3(d / 2);
}

} // namespace detail

inline VerifyReport run_verify(const VerifyOptions& opt)
{
    VerifyReport report{opt, {}};
    SuiteResult charsum{"char-sum"}, exhaustive{"oracle-exhaustive"}, sampled{"oracle-sampled"},
        spectrum{"trace-spectrum"}, partition{"partition"}, twist{"twist-sum"}, witness{"witness"},
        annihilation{"group-order"};

    std::mt19937_64 rng(opt.seed);
    const std::uint64_t cap = oracle_cap();

    auto check_count = [&](const ShortCurve& e, SuiteResult& suite) {
        const CountResult got = opt.counter(e);
        const i128 want = naive_count(e, cap);
        suite.record(got.order == want, detail::describe(e) + " closed form " + to_string(got.order) +
                                            ", oracle " + to_string(want));
        spectrum.record(detail::in_spectrum(e.context().degree(), got.frobenius_trace),
                        detail::describe(e) + " trace " + to_string(got.frobenius_trace));
    };

    for (unsigned d = 1; d <= opt.d_max; ++d) {
        const auto ctx_ptr = FieldContext::make(d);
        const FieldContext& ctx = *ctx_ptr;
        const std::uint64_t q = ctx.order();

        if (d <= 8 && q <= cap) {
            for (int a : {0, 1, -1}) {
                const i128 closed = s_closed(d, TraceValue(a));
                const i128 brute = s_brute(ctx, TraceValue(a), cap);
                charsum.record(closed == brute, "d=" + std::to_string(d) + " a=" + std::to_string(a) + " closed " +
                                                  to_string(closed) + ", brute " + to_string(brute));
            }
        }

        if (d <= 4) {
            const auto classes = list_classes(ctx);
            const FieldElement g = ctx.nonsquare();
            const i128 twist_total = 2 * i128(q) + 2;
            for (std::uint64_t a4 = 1; a4 < q; ++a4) {
                for (std::uint64_t a6 = 0; a6 < q; ++a6) {
                    const ShortCurve e{ctx.from_encoding(a4), ctx.from_encoding(a6)};
                    check_count(e, exhaustive);

                    const i128 pair = opt.counter(e).order + opt.counter(quadratic_twist(e, g)).order;
                    twist.record(pair == twist_total, detail::describe(e) + " curve + twist = " + to_string(pair));

                    const Canonical c = canonicalize(e);
                    witness.record(witness_holds(e, c.representative, c.witness),
                                   detail::describe(e) + " witness to representative fails");

                    int hits = 0;
                    bool matched = false;
                    for (const ClassEntry& entry : classes) {
                        if (isomorphic(e, entry.representative)) {
                            ++hits;
                            matched = entry.cls == c.cls && entry.representative == c.representative;
                        }
                    }
                    partition.record(hits == 1 && matched,
                                     detail::describe(e) + " isomorphic to " + std::to_string(hits) + " classes");
                }
            }
        } else if (d <= 7 && q <= cap) {
            for (unsigned i = 0; i < opt.samples; ++i) {
                FieldElement a4 = ctx.random(rng);
                while (a4.is_zero())
                    a4 = ctx.random(rng);
                const ShortCurve e{a4, ctx.random(rng)};
                check_count(e, sampled);
            }
        }

        if (d >= 5) {
            const unsigned curves = std::min(opt.samples, 20u);
            for (unsigned i = 0; i < curves; ++i) {
                FieldElement a4 = ctx.random(rng);
                while (a4.is_zero())
                    a4 = ctx.random(rng);
                const ShortCurve e{a4, ctx.random(rng)};
                const CountResult c = opt.counter(e);
                for (int k = 0; k < 3; ++k) {
                    const Point p = random_point(e, rng);
                    annihilation.record(scalar_mul(e, c.order, p).is_infinity(),
                                        detail::describe(e) + " order " + to_string(c.order) +
                                            " does not annihilate a point");
                }
            }
        }
    }

    report.suites = {charsum, exhaustive, sampled, spectrum, partition, twist, witness, annihilation};
    return report;
}

} // namespace ss3
