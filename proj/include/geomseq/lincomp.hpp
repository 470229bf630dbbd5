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

#ifndef GEOMSEQ_LINCOMP_HPP
#define GEOMSEQ_LINCOMP_HPP

#include <vector>

#include "geomseq/poly.hpp"
#include "geomseq/sequence.hpp"

namespace geomseq {

enum class LcMethod { berlekamp_massey, gcd };

inline const char* lc_method_name(LcMethod m) {
    return m == LcMethod::berlekamp_massey ? "berlekamp_massey" : "gcd";
}

/// Linear complexity result: L, the minimal polynomial (monic, of degree L,
/// dividing x^N - 1 for a period-N input), which method produced it, and the
/// construction parameters of the analyzed sequence.
struct LcReport {
    u64 linear_complexity = 0;
    DensePoly minimal_poly{2};
    LcMethod method = LcMethod::gcd;
    SeqParams params;
};

/// S(x) = S_0 + S_1 x + ... + S_{N-1} x^{N-1} over F_ell from one period.
inline DensePoly seq_polynomial(const SymbolSequence& s) {
    return DensePoly(s.ell(), s.to_vector());
}

namespace detail {

// Berlekamp-Massey over F_2 on packed words. The input is stored reversed
// once, so the window s_n, s_{n-1}, ..., s_{n-L} is a contiguous slice and
// the discrepancy is a word-parallel AND/popcount against C.
inline LcReport bm_binary(const SymbolSequence& s) {
    const u64 N = s.period();
    const u64 total = 2 * N;
    BitVec hist_rev(total);
    for (u64 i = 0; i < total; ++i) hist_rev.set(i, s.at(total - 1 - i) != 0);
    const std::size_t words = static_cast<std::size_t>(N / 64 + 2);
    std::vector<u64> c(words, 0), b(words, 0);
    c[0] = 1;
    b[0] = 1;
    u64 L = 0, shift = 1;
    auto xor_shifted = [&](std::vector<u64>& dst, const std::vector<u64>& src, u64 sh, u64 src_bits) {
        std::size_t ws = static_cast<std::size_t>(sh >> 6), bs = static_cast<std::size_t>(sh & 63);
        std::size_t nsrc = static_cast<std::size_t>(src_bits / 64) + 1;
        if (bs == 0) {
            for (std::size_t k = 0; k < nsrc && k + ws < dst.size(); ++k) dst[k + ws] ^= src[k];
        } else {
            u64 prev = 0;
            for (std::size_t k = 0; k <= nsrc && k + ws < dst.size(); ++k) {
                u64 cur = k < nsrc ? src[k] : 0;
                dst[k + ws] ^= (cur << bs) | (prev >> (64 - bs));
                prev = cur;
            }
        }
    };
    for (u64 n = 0; n < total; ++n) {
        // d = sum over i in 0..L of c_i * s_{n-i}; s_{n-i} sits at
        // hist_rev[total-1-n + i]
        const u64 off = total - 1 - n;
        u64 acc = 0;
        std::size_t last = static_cast<std::size_t>(L >> 6);
        for (std::size_t k = 0; k < last; ++k) acc ^= c[k] & hist_rev.extract64(off + 64 * k);
        u64 rem = (L & 63) + 1;
        u64 mask = rem == 64 ? ~u64{0} : (u64{1} << rem) - 1;
        acc ^= c[last] & hist_rev.extract64(off + 64 * last) & mask;
        u64 d = static_cast<u64>(std::popcount(acc)) & 1;
        if (d == 0) {
            ++shift;
        } else if (2 * L <= n) {
            std::vector<u64> t = c;
            xor_shifted(c, b, shift, L + 1);
            L = n + 1 - L;
            b = std::move(t);
            shift = 1;
        } else {
            xor_shifted(c, b, shift, L + 1);
            ++shift;
        }
    }
    // minimal polynomial = reversal of the connection polynomial to degree L
    std::vector<u32> mp(static_cast<std::size_t>(L) + 1, 0);
    for (u64 j = 0; j <= L; ++j) {
        u64 i = L - j;
        mp[static_cast<std::size_t>(j)] = (c[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
    }
    LcReport rep;
    rep.linear_complexity = L;
    rep.minimal_poly = DensePoly(2, std::move(mp));
    rep.method = LcMethod::berlekamp_massey;
    rep.params = s.params();
    return rep;
}

inline LcReport bm_generic(const SymbolSequence& s) {
    const u32 ell = s.ell();
    const u64 N = s.period();
    const u64 total = 2 * N;
    std::vector<u32> c{1}, b{1};
    u64 L = 0, shift = 1;
    u32 bd = 1; // discrepancy that accompanied the last length change
    std::vector<u32> hist(total);
    for (u64 n = 0; n < total; ++n) hist[n] = s.at(n);
    for (u64 n = 0; n < total; ++n) {
        u64 d = hist[n];
        for (u64 i = 1; i <= L && i <= n; ++i) d += u64{c[i]} * hist[n - i] % ell;
        d %= ell;
        if (d == 0) {
            ++shift;
            continue;
        }
        u32 coef = static_cast<u32>(d * pow_mod(bd, ell - 2, ell) % ell);
        if (2 * L <= n) {
            std::vector<u32> t = c;
            if (c.size() < b.size() + shift) c.resize(b.size() + shift, 0);
            for (std::size_t i = 0; i < b.size(); ++i)
                c[i + shift] = static_cast<u32>((c[i + shift] + u64{ell - coef % ell} % ell * b[i]) % ell);
            L = n + 1 - L;
            b = std::move(t);
            bd = static_cast<u32>(d);
            shift = 1;
        } else {
            if (c.size() < b.size() + shift) c.resize(b.size() + shift, 0);
            for (std::size_t i = 0; i < b.size(); ++i)
                c[i + shift] = static_cast<u32>((c[i + shift] + u64{ell - coef % ell} % ell * b[i]) % ell);
            ++shift;
        }
    }
    std::vector<u32> mp(static_cast<std::size_t>(L) + 1, 0);
    for (u64 j = 0; j <= L; ++j) {
        u32 ci = L - j < c.size() ? c[static_cast<std::size_t>(L - j)] : 0;
        // m(x) = x^L + c_1 x^{L-1} + ... + c_L  (recurrence written monically)
        mp[static_cast<std::size_t>(j)] = ci;
    }
    LcReport rep;
    rep.linear_complexity = L;
    rep.minimal_poly = DensePoly(ell, std::move(mp));
    rep.method = LcMethod::berlekamp_massey;
    rep.params = s.params();
    return rep;
}

} // namespace detail

/// Shortest LFSR over F_ell generating the sequence, found by feeding
/// exactly two full periods through Berlekamp-Massey; for a periodic input
/// that pins the true linear complexity and minimal polynomial.
inline LcReport berlekamp_massey(const SymbolSequence& s) {
    return s.ell() == 2 ? detail::bm_binary(s) : detail::bm_generic(s);
}

namespace detail {

// The quotient (x^N - 1)/gcd(x^N - 1, S(x)) is the minimal connection
// polynomial (it annihilates S(x) mod x^N - 1); the minimal polynomial of
// the recurrence is its reversal, normalized monic. Periodic input keeps the
// constant term nonzero, so the reversal preserves the degree.
inline DensePoly reverse_monic(const DensePoly& q) {
    const u32 ell = q.ell();
    std::vector<u32> rev(q.degree() + 1);
    for (std::size_t j = 0; j <= q.degree(); ++j) rev[j] = q.coeff(q.degree() - j);
    DensePoly r(ell, std::move(rev));
    if (r.degree() != q.degree()) throw std::logic_error("minimal_poly_gcd: connection polynomial has a root at 0");
    if (r.leading() == 1) return r;
    return r.scaled(static_cast<u32>(pow_mod(r.leading(), ell - 2, ell)));
}

} // namespace detail

/// The gcd route: L(S) = N - deg gcd(x^N - 1, S(x)), and the minimal
/// polynomial is the monic reversal of (x^N - 1)/gcd(x^N - 1, S(x)).
inline LcReport minimal_poly_gcd(const SymbolSequence& s) {
    const u64 N = s.period();
    LcReport rep;
    rep.method = LcMethod::gcd;
    rep.params = s.params();
    if (s.ell() == 2) {
        Gf2Poly sx;
        {
            const BitVec& b = s.bits();
            for (u64 i = 0; i < N; ++i)
                if (b.get(i)) sx.set_bit(i);
        }
        Gf2Poly xn1 = Gf2Poly::x_pow_plus_one(N);
        if (sx.is_zero()) {
            rep.linear_complexity = 0;
            rep.minimal_poly = DensePoly::one(2);
            return rep;
        }
        Gf2Poly g = gf2_gcd(xn1, sx);
        Gf2Poly mp = gf2_div_exact(Gf2Poly::x_pow_plus_one(N), g);
        rep.linear_complexity = N - g.degree();
        rep.minimal_poly = detail::reverse_monic(mp.to_dense());
        return rep;
    }
    DensePoly sx = seq_polynomial(s);
    DensePoly xn1 = DensePoly::x_pow_minus_one(s.ell(), N);
    if (sx.is_zero()) {
        rep.linear_complexity = 0;
        rep.minimal_poly = DensePoly::one(s.ell());
        return rep;
    }
    DensePoly g = poly_gcd(xn1, sx);
    auto [q, r] = poly_divmod(xn1, g);
    if (!r.is_zero()) throw std::logic_error("minimal_poly_gcd: gcd does not divide x^N - 1");
    rep.linear_complexity = N - g.degree();
    rep.minimal_poly = detail::reverse_monic(q);
    return rep;
}

/// True iff the recurrence defined by rep.minimal_poly regenerates the
/// sequence (used by the oracle tests).
inline bool recurrence_regenerates(const LcReport& rep, const SymbolSequence& s) {
    const DensePoly& mp = rep.minimal_poly;
    const u32 ell = s.ell();
    if (mp.is_zero() || mp.leading() != 1) return false;
    const u64 L = mp.degree();
    if (L != rep.linear_complexity) return false;
    if (L == 0) {
        for (u64 n = 0; n < s.period(); ++n)
            if (s.at(n) != 0) return false;
        return true;
    }
    // m(x) = x^L + a_{L-1} x^{L-1} + ... + a_0  encodes
    // S_{n+L} = -(a_{L-1} S_{n+L-1} + ... + a_0 S_n).
    for (u64 n = 0; n + L < 2 * s.period(); ++n) {
        u64 acc = 0;
        for (u64 i = 0; i < L; ++i) acc += u64{mp.coeff(i)} * s.at(n + i) % ell;
        acc = (ell - acc % ell) % ell;
        if (acc != s.at(n + L)) return false;
    }
    return true;
}

} // namespace geomseq

#endif // GEOMSEQ_LINCOMP_HPP
