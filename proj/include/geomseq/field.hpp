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

#ifndef GEOMSEQ_FIELD_HPP
#define GEOMSEQ_FIELD_HPP

#include <span>
#include <vector>

#include "geomseq/common.hpp"

namespace geomseq {

/// Legendre symbol (a/p) computed by Euler's criterion: a^((p-1)/2) mod p.
/// Returns 0 if p | a, +1 for nonzero quadratic residues, -1 otherwise.
/// p must be an odd prime.
inline int legendre_symbol(i64 a, u64 p) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("legendre_symbol: p must be an odd prime");
    u64 r = pow_mod(mod_floor(a, p), (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

/// Arithmetic context for the prime field F_p (p odd prime). Residues are
/// plain u32 values in [0, p). Immutable after construction; all operations
/// are pure and safe to share across threads.
class PrimeField {
public:
    explicit PrimeField(u32 p) : p_(p) {
        if (p < 3 || !is_prime(p)) throw std::invalid_argument("PrimeField: modulus must be an odd prime");
    }

    u32 p() const { return p_; }

    u32 add(u32 a, u32 b) const {
        u32 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p_ - b; }
    u32 neg(u32 a) const { return a == 0 ? 0 : p_ - a; }
    u32 mul(u32 a, u32 b) const { return static_cast<u32>(u64{a} * b % p_); }
    u32 pow(u32 a, u64 e) const { return static_cast<u32>(pow_mod(a, e, p_)); }
    u32 inv(u32 a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, p_ - 2);
    }

private:
    u32 p_;
};

bool is_primitive_polynomial(u32 p, std::span<const u32> poly, u64 max_field = kDefaultMaxField);
std::vector<u32> find_primitive_polynomial(u32 p, u32 m, u64 max_field = kDefaultMaxField);

/// Arithmetic context for F_{p^m} in the polynomial basis modulo a primitive
/// polynomial f. Elements are coefficient vectors of length m, ascending
/// degree. omega is the residue class of x and is required to generate the
/// whole multiplicative group, so g = omega^nu with nu = (p^m-1)/(p-1) is a
/// primitive element of F_p.
///
/// Contexts are immutable after construction and hold the precomputed trace
/// form Tr(x^i), making trace() an O(m) dot product.
class ExtField {
public:
    using Elem = std::vector<u32>;

    ExtField(u32 p, u32 m, std::vector<u32> primitive_poly, u64 max_field = kDefaultMaxField)
        : fp_(p), m_(m), poly_(std::move(primitive_poly)) {
        if (m < 2) throw std::invalid_argument("ExtField: extension degree must exceed 1");
        q_ = 1;
        for (u32 i = 0; i < m; ++i) {
            q_ *= p;
            if (q_ > max_field)
                throw std::length_error("ExtField: field size p^m exceeds the configured capacity of " +
                                        std::to_string(max_field));
        }
        if (poly_.size() != m + 1 || poly_[m] != 1)
            throw std::invalid_argument("ExtField: modulus must be monic of degree m");
        for (u32 c : poly_)
            if (c >= p) throw std::invalid_argument("ExtField: modulus coefficients must be reduced mod p");
        if (!is_primitive_polynomial(p, poly_, max_field))
            throw std::invalid_argument("ExtField: modulus is not primitive over F_p");
        nu_ = (q_ - 1) / (p - 1);
        Elem gel = pow(omega(), nu_);
        for (u32 i = 1; i < m_; ++i)
            if (gel[i] != 0) throw std::logic_error("ExtField: omega^nu not in the base field");
        g_ = gel[0];
        if (multiplicative_order(g_, p) != p - 1)
            throw std::logic_error("ExtField: omega^nu not primitive in F_p");
        init_trace_form();
    }

    /// Context with the deterministic default modulus: the lexicographically
    /// smallest primitive polynomial (ascending coefficient tuple, constant
    /// term first).
    static ExtField with_default_poly(u32 p, u32 m, u64 max_field = kDefaultMaxField) {
        return ExtField(p, m, find_primitive_polynomial(p, m, max_field), max_field);
    }

    u32 p() const { return fp_.p(); }
    u32 m() const { return m_; }
    u64 q() const { return q_; }
    u64 nu() const { return nu_; }
    u32 g() const { return g_; }
    const PrimeField& base() const { return fp_; }
    const std::vector<u32>& primitive_poly() const { return poly_; }

    Elem zero() const { return Elem(m_, 0); }
    Elem one() const {
        Elem e(m_, 0);
        e[0] = 1;
        return e;
    }
    Elem omega() const {
        Elem e(m_, 0);
        e[1] = 1;
        return e;
    }
    Elem from_base(u32 c) const {
        Elem e(m_, 0);
        e[0] = c % fp_.p();
        return e;
    }

    bool is_zero(const Elem& a) const {
        for (u32 c : a)
            if (c) return false;
        return true;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r(m_);
        for (u32 i = 0; i < m_; ++i) r[i] = fp_.add(a[i], b[i]);
        return r;
    }

    Elem scale(u32 c, const Elem& a) const {
        Elem r(m_);
        for (u32 i = 0; i < m_; ++i) r[i] = fp_.mul(c, a[i]);
        return r;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        const u32 p = fp_.p();
        std::vector<u64> acc(2 * m_ - 1, 0);
        for (u32 i = 0; i < m_; ++i) {
            if (a[i] == 0) continue;
            for (u32 j = 0; j < m_; ++j) acc[i + j] = (acc[i + j] + u64{a[i]} * b[j]) % p;
        }
        for (u32 d = 2 * m_ - 2; d >= m_; --d) {
            u64 c = acc[d];
            if (c) {
                acc[d] = 0;
                for (u32 j = 0; j < m_; ++j)
                    acc[d - m_ + j] = (acc[d - m_ + j] + c * (p - poly_[j])) % p;
            }
            if (d == m_) break;
        }
        Elem r(m_);
        for (u32 i = 0; i < m_; ++i) r[i] = static_cast<u32>(acc[i]);
        return r;
    }

    // In-place multiplication by omega: shift up one degree, reduce once.
    void mul_by_omega(Elem& a) const {
        const u32 p = fp_.p();
        u32 carry = a[m_ - 1];
        for (u32 i = m_ - 1; i > 0; --i) a[i] = a[i - 1];
        a[0] = 0;
        if (carry) {
            for (u32 i = 0; i < m_; ++i)
                a[i] = static_cast<u32>((a[i] + u64{carry} * (p - poly_[i])) % p);
        }
    }

    Elem pow(Elem a, u64 e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// Trace to the base field: Tr(a) = a + a^p + ... + a^(p^(m-1)).
    u32 trace(const Elem& a) const {
        u64 s = 0;
        for (u32 i = 0; i < m_; ++i) s += u64{trace_form_[i]} * a[i] % fp_.p();
        return static_cast<u32>(s % fp_.p());
    }

private:
    void init_trace_form() {
        // Tr is F_p-linear, so Tr(x^i) for i < m determines it. The
        // conjugates x^(p^j) are obtained by iterated Frobenius.
        std::vector<Elem> conj(m_);
        conj[0] = omega();
        for (u32 j = 1; j < m_; ++j) conj[j] = pow(conj[j - 1], fp_.p());
        trace_form_.assign(m_, 0);
        for (u32 i = 0; i < m_; ++i) {
            Elem s = zero();
            for (u32 j = 0; j < m_; ++j) s = add(s, pow(conj[j], i));
            for (u32 k = 1; k < m_; ++k)
                if (s[k] != 0) throw std::logic_error("ExtField: trace form not in the base field");
            trace_form_[i] = s[0];
        }
    }

    PrimeField fp_;
    u32 m_;
    std::vector<u32> poly_;
    u64 q_ = 0;
    u64 nu_ = 0;
    u32 g_ = 0;
    std::vector<u32> trace_form_;
};

namespace detail {

// Order check for x in F_p[x]/(f) without constructing an ExtField: if x has
// order exactly p^m - 1 then f is irreducible and x is primitive (a reducible
// modulus has fewer than p^m - 1 units).
inline bool x_has_maximal_order(u32 p, std::span<const u32> f) {
    const u32 m = static_cast<u32>(f.size()) - 1;
    u64 q = 1;
    for (u32 i = 0; i < m; ++i) q *= p;
    const u64 e = q - 1;

    auto mul = [&](const std::vector<u32>& a, const std::vector<u32>& b) {
        std::vector<u64> acc(2 * m - 1, 0);
        for (u32 i = 0; i < m; ++i) {
            if (a[i] == 0) continue;
            for (u32 j = 0; j < m; ++j) acc[i + j] = (acc[i + j] + u64{a[i]} * b[j]) % p;
        }
        for (u32 d = 2 * m - 2; d >= m; --d) {
            u64 c = acc[d];
            if (c) {
                acc[d] = 0;
                for (u32 j = 0; j < m; ++j) acc[d - m + j] = (acc[d - m + j] + c * (p - f[j])) % p;
            }
            if (d == m) break;
        }
        std::vector<u32> r(m);
        for (u32 i = 0; i < m; ++i) r[i] = static_cast<u32>(acc[i]);
        return r;
    };
    auto pw = [&](std::vector<u32> a, u64 k) {
        std::vector<u32> r(m, 0);
        r[0] = 1;
        while (k) {
            if (k & 1) r = mul(r, a);
            a = mul(a, a);
            k >>= 1;
        }
        return r;
    };

    std::vector<u32> x(m, 0);
    if (m < 2) return false;
    x[1] = 1;
    std::vector<u32> unit(m, 0);
    unit[0] = 1;
    if (pw(x, e) != unit) return false;
    u64 n = e;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        if (pw(x, e / d) == unit) return false;
        while (n % d == 0) n /= d;
    }
    if (n > 1 && pw(x, e / n) == unit) return false;
    return true;
}

} // namespace detail

/// True iff poly (ascending, monic, degree >= 2, coefficients reduced mod p)
/// is primitive over F_p, i.e. its root generates F_{p^m}^x.
inline bool is_primitive_polynomial(u32 p, std::span<const u32> poly, u64 max_field) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("is_primitive_polynomial: p must be an odd prime");
    if (poly.size() < 3) throw std::invalid_argument("is_primitive_polynomial: degree must exceed 1");
    const u32 m = static_cast<u32>(poly.size()) - 1;
    u64 q = 1;
    for (u32 i = 0; i < m; ++i) {
        q *= p;
        if (q > max_field)
            throw std::length_error("is_primitive_polynomial: field size p^m exceeds the configured capacity");
    }
    if (poly[m] != 1) return false;
    for (u32 c : poly)
        if (c >= p) throw std::invalid_argument("is_primitive_polynomial: coefficients must be reduced mod p");
    if (poly[0] == 0) return false; // x divides f
    return detail::x_has_maximal_order(p, poly);
}

/// Deterministic modulus selection: the lexicographically smallest (ascending
/// coefficient tuple, constant term first) monic degree-m polynomial over F_p
/// whose root is primitive. Existence is guaranteed, so this always returns.
inline std::vector<u32> find_primitive_polynomial(u32 p, u32 m, u64 max_field) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("find_primitive_polynomial: p must be an odd prime");
    if (m < 2) throw std::invalid_argument("find_primitive_polynomial: m must exceed 1");
    u64 q = 1;
    for (u32 i = 0; i < m; ++i) {
        q *= p;
        if (q > max_field)
            throw std::length_error("find_primitive_polynomial: field size p^m exceeds the configured capacity");
    }
    std::vector<u32> cand(m + 1, 0);
    cand[m] = 1;
    // Tuples (c_0, ..., c_{m-1}) in lexicographic order with the constant
    // term as the most significant position; c_0 = 0 never yields a unit x,
    // so enumeration starts at c_0 = 1.
    u64 lead = q / p; // p^(m-1)
    for (u64 v = lead; v < q; ++v) {
        u64 t = v;
        for (u32 i = m; i-- > 0;) {
            cand[i] = static_cast<u32>(t % p);
            t /= p;
        }
        if (detail::x_has_maximal_order(p, cand)) return cand;
    }
    throw std::logic_error("find_primitive_polynomial: no primitive polynomial found");
}

} // namespace geomseq

#endif // GEOMSEQ_FIELD_HPP
