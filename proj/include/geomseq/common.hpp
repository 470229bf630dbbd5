/*
   Copyright 2026 The geomseq authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GEOMSEQ_COMMON_HPP
#define GEOMSEQ_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace geomseq {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Field sizes are capped so that tables fit in memory and u64 never
// overflows on p^2-sized intermediate products.
inline constexpr u64 kDefaultMaxField = u64{1} << 20;

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline u64 pow_mod(u64 base, u64 exp, u64 mod) {
    if (mod == 1) return 0;
    u64 r = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

inline u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
inline u64 multiplicative_order(u64 a, u64 n) {
    a %= n;
    if (n == 1) return 1;
    if (gcd_u64(a, n) != 1) throw std::invalid_argument("multiplicative_order: a not a unit mod n");
    u64 o = 1, x = a;
    while (x != 1) {
        x = x * a % n;
        ++o;
    }
    return o;
}

// x in [0, n) congruent to a.
inline u64 mod_floor(i64 a, u64 n) {
    if (n == 0) throw std::invalid_argument("mod_floor: n = 0");
    i64 m = a % static_cast<i64>(n);
    if (m < 0) m += static_cast<i64>(n);
    return static_cast<u64>(m);
}

// 2-adic valuation of n > 0.
inline u32 two_adic_valuation(u64 n) {
    if (n == 0) throw std::invalid_argument("two_adic_valuation: n = 0");
    u32 v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    return v;
}

} // namespace geomseq

#endif // GEOMSEQ_COMMON_HPP
