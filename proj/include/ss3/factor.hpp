#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "ss3/int128.hpp"

namespace ss3::factor {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(u128(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

/// Deterministic for all 64-bit inputs.
inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

/// Brent's variant of Pollard rho. Returns a nontrivial factor or nothing
/// once the iteration budget is spent.
inline std::optional<std::uint64_t> pollard_rho(std::uint64_t n, std::uint64_t budget)
{
    if (n % 2 == 0)
        return 2;
    for (std::uint64_t c = 1; c < 64; ++c) {
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        std::uint64_t r = 1, spent = 0;
        const std::uint64_t block = 128;
        auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
        while (g == 1 && spent < budget) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                y = f(y);
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(block, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += block;
            }
            spent += r;
            r <<= 1;
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != 1 && g != n)
            return g;
        if (spent >= budget)
            return std::nullopt;
    }
    return std::nullopt;
}

/// Prime factorization with multiplicity, sorted ascending. Trial division up
/// to `trial_bound`, then Pollard rho on the cofactor. Empty optional when a
/// composite cofactor resists `rho_budget` iterations.
inline std::optional<std::vector<std::uint64_t>> factorize(std::uint64_t n,
                                                          std::uint64_t trial_bound = 1'000'000,
                                                          std::uint64_t rho_budget = 1u << 24)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= trial_bound && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    std::vector<std::uint64_t> pending;
    if (n > 1)
        pending.push_back(n);
    while (!pending.empty()) {
        std::uint64_t m = pending.back();
        pending.pop_back();
        if (is_prime(m)) {
            out.push_back(m);
            continue;
        }
        auto f = pollard_rho(m, rho_budget);
        if (!f)
            return std::nullopt;
        pending.push_back(*f);
        pending.push_back(m / *f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::uint64_t> distinct(std::vector<std::uint64_t> factors)
{
    factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
    return factors;
}

} // namespace ss3::factor
