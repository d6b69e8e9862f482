#pragma once

#include <cstdint>
#include <string>

namespace ss3 {

using i128 = __int128;
using u128 = unsigned __int128;

inline std::string to_string(i128 v)
{
    if (v == 0)
        return "0";
    bool neg = v < 0;
    u128 m = neg ? u128(0) - u128(v) : u128(v);
    std::string s;
    while (m != 0) {
        s.push_back(char('0' + int(m % 10)));
        m /= 10;
    }
    if (neg)
        s.push_back('-');
    return {s.rbegin(), s.rend()};
}

constexpr i128 pow3(unsigned e) noexcept
{
    i128 r = 1;
    for (unsigned i = 0; i < e; ++i)
        r *= 3;
    return r;
}

} // namespace ss3
