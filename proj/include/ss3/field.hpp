#pragma once

// Arithmetic in GF(3^d) = F_3[t]/(m(t)) for 1 <= d <= 40.
//
// Elements are bitsliced: bit i of `p` is set when the coefficient of t^i is
// 1, bit i of `n` when it is 2 (= -1). Addition is a handful of word
// operations and multiplication is d shift-and-add steps.

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ss3/errors.hpp"
#include "ss3/factor.hpp"
#include "ss3/int128.hpp"

namespace ss3 {

inline constexpr unsigned kMaxDegree = 40;     // 3^40 < 2^64
inline constexpr unsigned kDefaultDegreeCap = 31;

namespace detail {

struct Trits {
    std::uint64_t p = 0;
    std::uint64_t n = 0;

    friend bool operator==(const Trits&, const Trits&) = default;
};

constexpr Trits add(Trits a, Trits b) noexcept
{
    const std::uint64_t a0 = ~(a.p | a.n);
    const std::uint64_t b0 = ~(b.p | b.n);
    return {(a.p & b0) | (b.p & a0) | (a.n & b.n), (a.n & b0) | (b.n & a0) | (a.p & b.p)};
}

constexpr Trits neg(Trits a) noexcept { return {a.n, a.p}; }

constexpr Trits sub(Trits a, Trits b) noexcept { return add(a, neg(b)); }

constexpr int trit_at(Trits a, unsigned i) noexcept
{
    const std::uint64_t bit = std::uint64_t{1} << i;
    return (a.p & bit) ? 1 : (a.n & bit) ? 2 : 0;
}

constexpr Trits with_trit(Trits a, unsigned i, int v) noexcept
{
    const std::uint64_t bit = std::uint64_t{1} << i;
    a.p &= ~bit;
    a.n &= ~bit;
    if (v == 1)
        a.p |= bit;
    else if (v == 2)
        a.n |= bit;
    return a;
}

/// F_3[t]/(m) for a monic m of degree d; m need not be irreducible.
struct TritRing {
    unsigned d = 1;
    std::uint64_t mask = 1;
    Trits mod_low; // m(t) - t^d

    TritRing() = default;

    TritRing(unsigned degree, Trits low)
        : d(degree), mask(degree == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << degree) - 1), mod_low(low)
    {}

    Trits mul_t(Trits a) const noexcept
    {
        const int top = trit_at(a, d - 1);
        Trits r{(a.p << 1) & mask, (a.n << 1) & mask};
        if (top == 1)
            r = sub(r, mod_low);
        else if (top == 2)
            r = add(r, mod_low);
        return r;
    }

    Trits mul(Trits a, Trits b) const noexcept
    {
        Trits acc;
        for (unsigned i = d; i-- > 0;) {
            acc = mul_t(acc);
            const std::uint64_t bit = std::uint64_t{1} << i;
            if (b.p & bit)
                acc = add(acc, a);
            else if (b.n & bit)
                acc = sub(acc, a);
        }
        return acc;
    }
};

using Poly3 = std::vector<std::uint8_t>; // little-endian coefficients in {0,1,2}

inline void trim(Poly3& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline Poly3 poly_mod(Poly3 a, const Poly3& b)
{
    trim(a);
    // b is trimmed and nonzero; its leading coefficient is its own inverse in F_3
    const std::uint8_t lead_inv = b.back();
    while (a.size() >= b.size()) {
        const std::uint8_t f = std::uint8_t(a.back() * lead_inv % 3);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = std::uint8_t((a[shift + i] + 3 * 3 - f * b[i]) % 3);
        trim(a);
    }
    return a;
}

inline Poly3 poly_gcd(Poly3 a, Poly3 b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly3 r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline Poly3 to_poly(Trits a, unsigned d)
{
    Poly3 out(d);
    for (unsigned i = 0; i < d; ++i)
        out[i] = std::uint8_t(trit_at(a, i));
    trim(out);
    return out;
}

/// Ben-Or: a monic m of degree d is irreducible iff gcd(t^(3^k) - t, m) = 1
/// for every 1 <= k <= d/2.
inline bool is_irreducible(const Poly3& monic)
{
    const unsigned d = unsigned(monic.size() - 1);
    if (d <= 1)
        return true;
    Trits low;
    for (unsigned i = 0; i < d; ++i)
        low = with_trit(low, i, monic[i]);
    const TritRing ring(d, low);
    const Trits t = with_trit({}, 1, 1);
    Trits h = t;
    for (unsigned k = 1; k <= d / 2; ++k) {
        h = ring.mul(ring.mul(h, h), h);
        const Poly3 g = poly_gcd(to_poly(sub(h, t), d), monic);
        if (g.size() > 1)
            return false;
    }
    return true;
}

} // namespace detail

class FieldContext;

/// An element of F_3 as used for traces: one of 0, 1, -1.
class TraceValue {
public:
    constexpr TraceValue() = default;
    constexpr explicit TraceValue(int v) noexcept : v_(normalize(v)) {}

    constexpr int value() const noexcept { return v_; }
    /// Representative in {0, 1, 2}.
    constexpr int residue() const noexcept { return v_ < 0 ? 2 : v_; }
    constexpr bool is_zero() const noexcept { return v_ == 0; }

    friend constexpr TraceValue operator+(TraceValue a, TraceValue b) noexcept { return TraceValue(a.v_ + b.v_); }
    friend constexpr TraceValue operator-(TraceValue a, TraceValue b) noexcept { return TraceValue(a.v_ - b.v_); }
    friend constexpr TraceValue operator-(TraceValue a) noexcept { return TraceValue(-a.v_); }
    friend constexpr TraceValue operator*(TraceValue a, TraceValue b) noexcept { return TraceValue(a.v_ * b.v_); }
    friend constexpr bool operator==(TraceValue, TraceValue) = default;

private:
    static constexpr int normalize(int v) noexcept
    {
        int r = ((v % 3) + 3) % 3;
        return r == 2 ? -1 : r;
    }

    int v_ = 0;
};

class FieldElement {
public:
    FieldElement(const FieldContext& ctx, detail::Trits bits) noexcept : ctx_(&ctx), bits_(bits) {}

    const FieldContext& context() const noexcept { return *ctx_; }
    detail::Trits bits() const noexcept { return bits_; }

    /// Coefficient of t^i, in {0, 1, 2}.
    int coeff(unsigned i) const noexcept { return detail::trit_at(bits_, i); }
    bool is_zero() const noexcept { return bits_.p == 0 && bits_.n == 0; }
    bool is_one() const noexcept { return bits_.n == 0 && bits_.p == 1; }

    /// The base-3 integer c0 + 3 c1 + 9 c2 + ...; this is the element order used for
    /// every tie-break in the library.
    std::uint64_t encoding() const noexcept;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator-(FieldElement a) noexcept
    {
        a.bits_ = detail::neg(a.bits_);
        return a;
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept
    {
        return a.ctx_ == b.ctx_ && a.bits_ == b.bits_;
    }

private:
    void check_same(const FieldElement& o) const
    {
        if (ctx_ != o.ctx_)
            throw Error(Errc::ContextMismatch, "elements belong to different field contexts");
    }

    const FieldContext* ctx_;
    detail::Trits bits_;
};

inline bool encoding_less(const FieldElement& a, const FieldElement& b) noexcept
{
    return a.encoding() < b.encoding();
}

/// A fixed model of GF(3^d) together with the constants the classification
/// needs: a primitive root beta, a trace-one element alpha and, for even d, a
/// square root tau of -1. Immutable once built; elements keep a pointer to it,
/// so it is only handed out through shared_ptr and never copied.
class FieldContext {
public:
    using Ptr = std::shared_ptr<const FieldContext>;

    /// `modulus_override` is the full monic coefficient list c0..c_d with c_d = 1.
    static Ptr make(unsigned d, std::optional<std::vector<int>> modulus_override = std::nullopt,
                    unsigned degree_cap = kDefaultDegreeCap)
    {
        return Ptr(new FieldContext(d, std::move(modulus_override), degree_cap));
    }

    FieldContext(const FieldContext&) = delete;
    FieldContext& operator=(const FieldContext&) = delete;

    unsigned degree() const noexcept { return ring_.d; }
    std::uint64_t order() const noexcept { return q_; }
    const std::vector<int>& modulus() const noexcept { return modulus_; }
    const std::vector<std::uint64_t>& q_minus_1_factors() const noexcept { return factors_; }

    const FieldElement& beta() const noexcept { return *beta_; }
    const FieldElement& alpha() const noexcept { return *alpha_; }
    const std::optional<FieldElement>& tau() const noexcept { return tau_; }
    /// Smallest-encoding non-square; seeds Tonelli-Shanks.
    const FieldElement& nonsquare() const noexcept { return *nonsquare_; }

    FieldElement zero() const noexcept { return {*this, {}}; }
    FieldElement one() const noexcept { return {*this, {1, 0}}; }
    FieldElement from_int(int v) const noexcept
    {
        const int r = ((v % 3) + 3) % 3;
        return {*this, detail::with_trit({}, 0, r)};
    }
    FieldElement from_trace(TraceValue v) const noexcept { return from_int(v.value()); }

    /// Element with the given little-endian coefficients (length d, entries 0..2).
    FieldElement from_coeffs(const std::vector<int>& c) const
    {
        if (c.size() != degree())
            throw Error(Errc::ParseError, "expected " + std::to_string(degree()) + " coefficients, got " +
                                              std::to_string(c.size()));
        detail::Trits b;
        for (unsigned i = 0; i < c.size(); ++i) {
            if (c[i] < 0 || c[i] > 2)
                throw Error(Errc::ParseError, "coefficient out of range: " + std::to_string(c[i]));
            b = detail::with_trit(b, i, c[i]);
        }
        return {*this, b};
    }

    FieldElement from_encoding(std::uint64_t e) const
    {
        if (e >= q_)
            throw Error(Errc::ParseError, "encoding " + std::to_string(e) + " is not below q");
        detail::Trits b;
        for (unsigned i = 0; e != 0; ++i, e /= 3)
            b = detail::with_trit(b, i, int(e % 3));
        return {*this, b};
    }

    template <class Rng>
    FieldElement random(Rng& rng) const
    {
        return from_encoding(std::uint64_t(rng()) % q_);
    }

    /// Fourth roots of unity in encoding order: {1, -1} for odd d, {1, -1, tau, -tau} otherwise.
    std::vector<FieldElement> fourth_roots_of_unity() const
    {
        std::vector<FieldElement> out{one(), -one()};
        if (tau_) {
            out.push_back(*tau_);
            out.push_back(-*tau_);
        }
        std::sort(out.begin(), out.end(), encoding_less);
        return out;
    }

    const detail::TritRing& ring() const noexcept { return ring_; }
    /// Tr(t^i) as a residue in {0,1,2}.
    int basis_trace(unsigned i) const noexcept { return basis_trace_[i]; }

private:
    FieldContext(unsigned d, std::optional<std::vector<int>> modulus_override, unsigned degree_cap);

    detail::TritRing ring_;
    std::vector<int> modulus_;
    std::uint64_t q_ = 0;
    std::vector<std::uint64_t> factors_;
    std::array<int, kMaxDegree> basis_trace_{};
    std::optional<FieldElement> beta_;
    std::optional<FieldElement> alpha_;
    std::optional<FieldElement> tau_;
    std::optional<FieldElement> nonsquare_;
};

// ---------------------------------------------------------------------------
// FieldElement members

inline std::uint64_t FieldElement::encoding() const noexcept
{
    std::uint64_t e = 0;
    for (unsigned i = ctx_->degree(); i-- > 0;)
        e = e * 3 + std::uint64_t(coeff(i));
    return e;
}

inline FieldElement& FieldElement::operator+=(const FieldElement& o)
{
    check_same(o);
    bits_ = detail::add(bits_, o.bits_);
    return *this;
}

inline FieldElement& FieldElement::operator-=(const FieldElement& o)
{
    check_same(o);
    bits_ = detail::sub(bits_, o.bits_);
    return *this;
}

inline FieldElement& FieldElement::operator*=(const FieldElement& o)
{
    check_same(o);
    bits_ = ctx_->ring().mul(bits_, o.bits_);
    return *this;
}

// ---------------------------------------------------------------------------
// Exponentiation, inversion, characters

inline FieldElement pow(const FieldElement& x, std::uint64_t e)
{
    FieldElement r = x.context().one();
    FieldElement b = x;
    while (e) {
        if (e & 1)
            r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline FieldElement inv(const FieldElement& x)
{
    if (x.is_zero())
        throw Error(Errc::DivisionByZero, "inverse of zero");
    return pow(x, x.context().order() - 2);
}

/// Signed exponent; negative powers invert first.
inline FieldElement pow(const FieldElement& x, long long n)
{
    if (n >= 0)
        return pow(x, std::uint64_t(n));
    return pow(inv(x), std::uint64_t(-(n + 1)) + 1);
}

inline FieldElement pow(const FieldElement& x, int n) { return pow(x, static_cast<long long>(n)); }

inline FieldElement operator/(const FieldElement& a, const FieldElement& b)
{
    a.check_same(b);
    return a * inv(b);
}

inline FieldElement square(const FieldElement& x) { return x * x; }
inline FieldElement cube(const FieldElement& x) { return x * x * x; }

/// Absolute trace to F_3, via the precomputed traces of the power basis.
inline TraceValue trace(const FieldElement& x)
{
    const FieldContext& ctx = x.context();
    int s = 0;
    for (unsigned i = 0; i < ctx.degree(); ++i)
        s += x.coeff(i) * ctx.basis_trace(i);
    return TraceValue(s);
}

/// x + x^3 + ... + x^(3^(d-1)), computed literally. Used to build the basis
/// traces and as an independent check in tests.
inline TraceValue trace_by_frobenius(const FieldElement& x)
{
    FieldElement acc = x;
    FieldElement f = x;
    for (unsigned i = 1; i < x.context().degree(); ++i) {
        f = cube(f);
        acc += f;
    }
    const auto b = acc.bits();
    if ((b.p | b.n) > 1)
        throw std::logic_error("trace did not land in the prime field");
    return TraceValue(detail::trit_at(b, 0));
}

/// Quadratic character with chi(0) = 0.
inline int chi(const FieldElement& x)
{
    if (x.is_zero())
        return 0;
    return pow(x, (x.context().order() - 1) / 2).is_one() ? 1 : -1;
}

inline bool is_fourth_power(const FieldElement& x)
{
    if (x.is_zero())
        throw Error(Errc::ZeroArgument, "is_fourth_power(0)");
    const FieldContext& ctx = x.context();
    if (ctx.degree() % 2 == 1)
        return chi(x) == 1;
    return pow(x, (ctx.order() - 1) / 4).is_one();
}

/// Square root with the smaller encoding, or nothing for non-squares.
inline std::optional<FieldElement> sqrt(const FieldElement& x)
{
    if (x.is_zero())
        return x;
    if (chi(x) != 1)
        return std::nullopt;
    const FieldContext& ctx = x.context();
    const std::uint64_t q = ctx.order();
    std::optional<FieldElement> root;
    if (q % 4 == 3) {
        root = pow(x, (q + 1) / 4);
    } else {
        // Tonelli-Shanks
        std::uint64_t m = q - 1;
        unsigned s = 0;
        while (m % 2 == 0) {
            m /= 2;
            ++s;
        }
        FieldElement c = pow(ctx.nonsquare(), m);
        FieldElement t = pow(x, m);
        FieldElement r = pow(x, (m + 1) / 2);
        while (!t.is_one()) {
            unsigned i = 0;
            FieldElement t2 = t;
            while (!t2.is_one()) {
                t2 = square(t2);
                ++i;
            }
            FieldElement b = c;
            for (unsigned j = 0; j + i + 1 < s; ++j)
                b = square(b);
            s = i;
            c = square(b);
            t *= c;
            r *= b;
        }
        root = r;
    }
    FieldElement other = -*root;
    return encoding_less(other, *root) ? other : *root;
}

/// Some v with v^4 = x, or nothing when x is not a fourth power (x = 0 gives 0).
inline std::optional<FieldElement> fourth_root(const FieldElement& x)
{
    auto s = sqrt(x);
    if (!s)
        return std::nullopt;
    if (chi(*s) == -1)
        s = -*s;
    return sqrt(*s);
}

/// Solves r^3 + c r + k = 0. The map r -> r^3 + c r is F_3-linear, so this is a
/// d x d linear system over F_3. Among all solutions the smallest encoding wins.
inline std::optional<FieldElement> solve_linearized(const FieldElement& c, const FieldElement& k)
{
    const FieldContext& ctx = c.context();
    if (&k.context() != &ctx)
        throw Error(Errc::ContextMismatch, "solve_linearized operands from different contexts");
    const unsigned d = ctx.degree();

    // rows[i][j] = coefficient of t^i in L(t^j); last column holds -k.
    std::vector<std::vector<int>> rows(d, std::vector<int>(d + 1, 0));
    for (unsigned j = 0; j < d; ++j) {
        const FieldElement basis(ctx, detail::with_trit({}, j, 1));
        const FieldElement image = cube(basis) + c * basis;
        for (unsigned i = 0; i < d; ++i)
            rows[i][j] = image.coeff(i);
    }
    const FieldElement rhs = -k;
    for (unsigned i = 0; i < d; ++i)
        rows[i][d] = rhs.coeff(i);

    std::vector<int> pivot_col;
    unsigned rank = 0;
    for (unsigned col = 0; col < d && rank < d; ++col) {
        unsigned sel = rank;
        while (sel < d && rows[sel][col] == 0)
            ++sel;
        if (sel == d)
            continue;
        std::swap(rows[sel], rows[rank]);
        const int inv_p = rows[rank][col]; // 1 and 2 are self-inverse mod 3
        for (auto& v : rows[rank])
            v = v * inv_p % 3;
        for (unsigned i = 0; i < d; ++i) {
            if (i == rank || rows[i][col] == 0)
                continue;
            const int f = rows[i][col];
            for (unsigned j = 0; j <= d; ++j)
                rows[i][j] = ((rows[i][j] - f * rows[rank][j]) % 3 + 3) % 3;
        }
        pivot_col.push_back(int(col));
        ++rank;
    }
    for (unsigned i = rank; i < d; ++i) {
        if (rows[i][d] != 0)
            return std::nullopt;
    }

    std::vector<bool> is_pivot(d, false);
    for (int pc : pivot_col)
        is_pivot[unsigned(pc)] = true;

    std::vector<int> particular(d, 0);
    for (unsigned i = 0; i < rank; ++i)
        particular[unsigned(pivot_col[i])] = rows[i][d];

    std::vector<std::vector<int>> kernel;
    for (unsigned free = 0; free < d; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<int> v(d, 0);
        v[free] = 1;
        for (unsigned i = 0; i < rank; ++i)
            v[unsigned(pivot_col[i])] = (3 - rows[i][free]) % 3;
        kernel.push_back(std::move(v));
    }

    std::optional<FieldElement> best;
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < kernel.size(); ++i)
        combos *= 3;
    for (std::uint64_t m = 0; m < combos; ++m) {
        std::vector<int> sol = particular;
        std::uint64_t digits = m;
        for (const auto& kv : kernel) {
            const int w = int(digits % 3);
            digits /= 3;
            for (unsigned j = 0; j < d; ++j)
                sol[j] = (sol[j] + w * kv[j]) % 3;
        }
        FieldElement cand = ctx.from_coeffs(sol);
        if (!best || encoding_less(cand, *best))
            best = cand;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Text codec

/// Canonical text form: comma-separated coefficients, constant term first.
inline std::string format_element(const FieldElement& x)
{
    std::string s;
    for (unsigned i = 0; i < x.context().degree(); ++i) {
        if (i)
            s.push_back(',');
        s.push_back(char('0' + x.coeff(i)));
    }
    return s;
}

/// Accepts "c0,c1,..." (exactly d entries) or a decimal integer below q whose
/// base-3 digits are the coefficients.
inline FieldElement parse_element(const FieldContext& ctx, std::string_view text)
{
    auto strip = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    };
    auto parse_uint = [&](std::string_view s) -> std::uint64_t {
        s = strip(s);
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
            throw Error(Errc::ParseError, "bad number '" + std::string(s) + "'");
        return v;
    };

    text = strip(text);
    if (text.find(',') == std::string_view::npos)
        return ctx.from_encoding(parse_uint(text));

    std::vector<int> coeffs;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::uint64_t v = parse_uint(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
        if (v > 2)
            throw Error(Errc::ParseError, "coefficient " + std::to_string(v) + " is not a base-3 digit");
        coeffs.push_back(int(v));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return ctx.from_coeffs(coeffs);
}

// ---------------------------------------------------------------------------
// Context construction

inline FieldContext::FieldContext(unsigned d, std::optional<std::vector<int>> modulus_override, unsigned degree_cap)
{
    if (d < 1 || d > std::min(degree_cap, kMaxDegree))
        throw Error(Errc::DegreeOutOfRange,
                    "d = " + std::to_string(d) + " outside [1, " + std::to_string(std::min(degree_cap, kMaxDegree)) +
                        "]");

    q_ = 1;
    for (unsigned i = 0; i < d; ++i)
        q_ *= 3;

    detail::Poly3 monic;
    if (modulus_override) {
        const auto& m = *modulus_override;
        if (m.size() != d + 1 || m.back() != 1)
            throw Error(Errc::ParseError, "modulus must be monic of degree " + std::to_string(d));
        for (int c : m) {
            if (c < 0 || c > 2)
                throw Error(Errc::ParseError, "modulus coefficient out of range");
            monic.push_back(std::uint8_t(c));
        }
        if (!detail::is_irreducible(monic))
            throw Error(Errc::ModulusReducible, "modulus is not irreducible over F_3");
    } else {
        // Low coefficients in increasing base-3 order; the first irreducible wins.
        for (std::uint64_t code = 0; code < q_; ++code) {
            detail::Poly3 cand(d + 1, 0);
            std::uint64_t e = code;
            for (unsigned i = 0; i < d; ++i, e /= 3)
                cand[i] = std::uint8_t(e % 3);
            cand[d] = 1;
            if (detail::is_irreducible(cand)) {
                monic = std::move(cand);
                break;
            }
        }
    }
    detail::Trits low;
    for (unsigned i = 0; i < d; ++i)
        low = detail::with_trit(low, i, monic[i]);
    ring_ = detail::TritRing(d, low);
    modulus_.assign(monic.begin(), monic.end());

    for (unsigned i = 0; i < d; ++i)
        basis_trace_[i] = trace_by_frobenius(FieldElement(*this, detail::with_trit({}, i, 1))).residue();

    auto factors = factor::factorize(q_ - 1);
    if (!factors)
        throw Error(Errc::FactorizationFailure, "could not factor 3^" + std::to_string(d) + " - 1");
    factors_ = std::move(*factors);
    const auto primes = factor::distinct(factors_);

    for (std::uint64_t e = 1; e < q_ && !beta_; ++e) {
        const FieldElement x = from_encoding(e);
        const bool generator = std::all_of(primes.begin(), primes.end(),
                                           [&](std::uint64_t p) { return !pow(x, (q_ - 1) / p).is_one(); });
        if (generator)
            beta_ = x;
    }
    // Smallest encoding with trace 1 is c t^i for the lowest i with Tr(t^i) != 0;
    // everything encoded below 3^i has trace 0. A scan would be too slow when
    // 3 | d, where only high powers of t have nonzero trace.
    for (unsigned i = 0; i < d && !alpha_; ++i) {
        if (basis_trace_[i] != 0)
            alpha_ = FieldElement(*this, detail::with_trit({}, i, basis_trace_[i] == 1 ? 1 : 2));
    }
    for (std::uint64_t e = 1; e < q_ && !nonsquare_; ++e) {
        const FieldElement x = from_encoding(e);
        if (chi(x) == -1)
            nonsquare_ = x;
    }
    if (d % 2 == 0)
        tau_ = sqrt(-one());
}

} // namespace ss3
