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

#ifndef GEOMSEQ_POLY_HPP
#define GEOMSEQ_POLY_HPP

#include <algorithm>
#include <charconv>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geomseq/bitvec.hpp"
#include "geomseq/common.hpp"
#include "geomseq/field.hpp"

namespace geomseq {

/// Dense polynomial over F_ell (ell prime), coefficients in ascending degree,
/// always normalized: no trailing zero coefficients, the zero polynomial has
/// an empty coefficient vector. The zero polynomial's degree is deliberately
/// not a number; callers branch on is_zero() first.
class DensePoly {
public:
    explicit DensePoly(u32 ell) : ell_(ell) { check_ell(ell); }

    DensePoly(u32 ell, std::vector<u32> coeffs) : ell_(ell), c_(std::move(coeffs)) {
        check_ell(ell);
        for (u32& v : c_) v %= ell_;
        normalize();
    }

    static DensePoly zero(u32 ell) { return DensePoly(ell); }
    static DensePoly one(u32 ell) { return DensePoly(ell, {1}); }
    static DensePoly x_pow(u32 ell, u64 n) {
        DensePoly r(ell);
        r.c_.assign(n + 1, 0);
        r.c_[n] = 1;
        return r;
    }
    /// x^n - 1
    static DensePoly x_pow_minus_one(u32 ell, u64 n) {
        if (n == 0) return zero(ell);
        DensePoly r(ell);
        r.c_.assign(n + 1, 0);
        r.c_[0] = ell - 1;
        r.c_[n] = 1;
        return r;
    }

    u32 ell() const { return ell_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t degree() const {
        if (is_zero()) throw std::logic_error("DensePoly: degree of the zero polynomial");
        return c_.size() - 1;
    }
    u32 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<u32>& coeffs() const { return c_; }
    u32 leading() const { return c_.back(); }

    bool operator==(const DensePoly& o) const { return ell_ == o.ell_ && c_ == o.c_; }

    u32 eval(u32 x) const {
        x %= ell_;
        u64 acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = (acc * x + c_[i]) % ell_;
        return static_cast<u32>(acc);
    }

    DensePoly operator+(const DensePoly& o) const {
        require_same_field(o);
        std::vector<u32> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = (coeff(i) + o.coeff(i)) % ell_;
        return DensePoly(ell_, std::move(r));
    }

    DensePoly operator-(const DensePoly& o) const {
        require_same_field(o);
        std::vector<u32> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = (coeff(i) + ell_ - o.coeff(i)) % ell_;
        return DensePoly(ell_, std::move(r));
    }

    DensePoly operator*(const DensePoly& o) const {
        require_same_field(o);
        if (is_zero() || o.is_zero()) return zero(ell_);
        std::vector<u32> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = static_cast<u32>((r[i + j] + u64{c_[i]} * o.c_[j]) % ell_);
        }
        return DensePoly(ell_, std::move(r));
    }

    DensePoly scaled(u32 s) const {
        s %= ell_;
        std::vector<u32> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = static_cast<u32>(u64{c_[i]} * s % ell_);
        return DensePoly(ell_, std::move(r));
    }

private:
    static void check_ell(u32 ell) {
        if (!is_prime(ell)) throw std::invalid_argument("DensePoly: coefficient modulus must be prime");
    }
    void require_same_field(const DensePoly& o) const {
        if (ell_ != o.ell_) throw std::invalid_argument("DensePoly: mixed coefficient fields");
    }
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    u32 ell_;
    std::vector<u32> c_;
};

/// Quotient and remainder of a / b; b nonzero.
inline std::pair<DensePoly, DensePoly> poly_divmod(const DensePoly& a, const DensePoly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by the zero polynomial");
    const u32 ell = a.ell();
    if (a.is_zero() || a.degree() < b.degree()) return {DensePoly::zero(ell), a};
    u32 lead_inv = static_cast<u32>(pow_mod(b.leading(), ell - 2, ell));
    std::vector<u32> rem(a.coeffs());
    std::vector<u32> quo(a.degree() - b.degree() + 1, 0);
    for (std::size_t d = a.degree() + 1; d-- > b.degree();) {
        if (rem[d] == 0) continue;
        u32 f = static_cast<u32>(u64{rem[d]} * lead_inv % ell);
        quo[d - b.degree()] = f;
        for (std::size_t j = 0; j <= b.degree(); ++j) {
            std::size_t k = d - b.degree() + j;
            rem[k] = static_cast<u32>((rem[k] + u64{f} * (ell - b.coeff(j))) % ell);
        }
    }
    return {DensePoly(ell, std::move(quo)), DensePoly(ell, std::move(rem))};
}

/// Monic gcd by the schoolbook Euclidean algorithm.
inline DensePoly poly_gcd(DensePoly a, DensePoly b) {
    if (a.ell() != b.ell()) throw std::invalid_argument("poly_gcd: mixed coefficient fields");
    while (!b.is_zero()) {
        DensePoly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    u32 inv = static_cast<u32>(pow_mod(a.leading(), a.ell() - 2, a.ell()));
    return a.scaled(inv);
}

// ---------------------------------------------------------------------------
// GF(2) polynomials packed into 64-bit words. This is the workhorse for the
// large periods: Euclidean gcd and exact division run at word speed.
// ---------------------------------------------------------------------------

class Gf2Poly {
public:
    Gf2Poly() = default;

    static Gf2Poly zero() { return Gf2Poly(); }
    static Gf2Poly one() {
        Gf2Poly r;
        r.w_ = {1};
        return r;
    }
    /// x^n + 1
    static Gf2Poly x_pow_plus_one(u64 n) {
        Gf2Poly r;
        r.w_.assign(n / 64 + 1, 0);
        r.set_bit(n);
        r.set_bit(0);
        return r;
    }
    static Gf2Poly x_pow(u64 n) {
        Gf2Poly r;
        r.w_.assign(n / 64 + 1, 0);
        r.set_bit(n);
        return r;
    }

    static Gf2Poly from_dense(const DensePoly& p) {
        if (p.ell() != 2) throw std::invalid_argument("Gf2Poly: source polynomial not over F_2");
        Gf2Poly r;
        if (p.is_zero()) return r;
        r.w_.assign(p.degree() / 64 + 1, 0);
        for (std::size_t i = 0; i <= p.degree(); ++i)
            if (p.coeff(i)) r.set_bit(i);
        return r;
    }

    DensePoly to_dense() const {
        if (is_zero()) return DensePoly::zero(2);
        std::vector<u32> c(degree() + 1, 0);
        for (std::size_t i = 0; i <= degree(); ++i) c[i] = bit(i);
        return DensePoly(2, std::move(c));
    }

    bool is_zero() const {
        for (u64 w : w_)
            if (w) return false;
        return true;
    }

    u64 degree() const {
        for (std::size_t k = w_.size(); k-- > 0;)
            if (w_[k]) return 64 * k + 63 - static_cast<u64>(std::countl_zero(w_[k]));
        throw std::logic_error("Gf2Poly: degree of the zero polynomial");
    }

    bool bit(u64 i) const {
        std::size_t k = i >> 6;
        return k < w_.size() && ((w_[k] >> (i & 63)) & 1);
    }

    void set_bit(u64 i) {
        std::size_t k = i >> 6;
        if (k >= w_.size()) w_.resize(k + 1, 0);
        w_[k] ^= u64{1} << (i & 63);
    }

    u64 weight() const {
        u64 c = 0;
        for (u64 w : w_) c += static_cast<u64>(std::popcount(w));
        return c;
    }

    bool operator==(const Gf2Poly& o) const {
        std::size_t n = std::max(w_.size(), o.w_.size());
        for (std::size_t k = 0; k < n; ++k)
            if ((k < w_.size() ? w_[k] : 0) != (k < o.w_.size() ? o.w_[k] : 0)) return false;
        return true;
    }

    /// *this ^= other * x^shift
    void add_shifted(const Gf2Poly& other, u64 shift) {
        if (other.is_zero()) return;
        u64 need = other.degree() + shift;
        if (need / 64 >= w_.size()) w_.resize(need / 64 + 1, 0);
        std::size_t ws = shift >> 6, bs = shift & 63;
        if (bs == 0) {
            for (std::size_t k = 0; k < other.w_.size(); ++k) w_[k + ws] ^= other.w_[k];
        } else {
            u64 prev = 0;
            for (std::size_t k = 0; k < other.w_.size(); ++k) {
                u64 cur = other.w_[k];
                w_[k + ws] ^= (cur << bs) | (prev >> (64 - bs));
                prev = cur;
            }
            if ((prev >> (64 - bs)) != 0) w_[other.w_.size() + ws] ^= prev >> (64 - bs);
        }
    }

    Gf2Poly operator*(const Gf2Poly& o) const {
        Gf2Poly r;
        if (is_zero() || o.is_zero()) return r;
        const Gf2Poly& sparse = weight() <= o.weight() ? *this : o;
        const Gf2Poly& other = weight() <= o.weight() ? o : *this;
        for (u64 i = 0; i <= sparse.degree(); ++i)
            if (sparse.bit(i)) r.add_shifted(other, i);
        return r;
    }

    void mod_by(const Gf2Poly& b) {
        if (b.is_zero()) throw std::domain_error("Gf2Poly: division by zero");
        u64 db = b.degree();
        while (!is_zero()) {
            u64 da = degree();
            if (da < db) break;
            add_shifted(b, da - db);
        }
    }

    /// Quotient of *this / b; remainder replaces *this.
    Gf2Poly divmod_by(const Gf2Poly& b) {
        if (b.is_zero()) throw std::domain_error("Gf2Poly: division by zero");
        u64 db = b.degree();
        Gf2Poly q;
        while (!is_zero()) {
            u64 da = degree();
            if (da < db) break;
            q.set_bit(da - db);
            add_shifted(b, da - db);
        }
        return q;
    }

private:
    std::vector<u64> w_;
};

inline Gf2Poly gf2_gcd(Gf2Poly a, Gf2Poly b) {
    while (!b.is_zero()) {
        a.mod_by(b);
        std::swap(a, b);
    }
    return a;
}

/// Exact division; throws if the division leaves a remainder.
inline Gf2Poly gf2_div_exact(Gf2Poly a, const Gf2Poly& b) {
    Gf2Poly q = a.divmod_by(b);
    if (!a.is_zero()) throw std::logic_error("gf2_div_exact: division not exact");
    return q;
}

// ---------------------------------------------------------------------------
// Hasse derivatives and root multiplicity at 1.
// ---------------------------------------------------------------------------

/// Binomial coefficient mod a prime, by Lucas' theorem.
inline u32 binomial_mod_prime(u64 n, u64 k, u32 ell) {
    u64 r = 1;
    while (n || k) {
        u64 nd = n % ell, kd = k % ell;
        if (kd > nd) return 0;
        // C(nd, kd) mod ell with nd, kd < ell
        kd = std::min(kd, nd - kd);
        u64 num = 1, den = 1;
        for (u64 i = 0; i < kd; ++i) {
            num = num * ((nd - i) % ell) % ell;
            den = den * ((i + 1) % ell) % ell;
        }
        r = r * num % ell * pow_mod(den, ell - 2, ell) % ell;
        n /= ell;
        k /= ell;
    }
    return static_cast<u32>(r);
}

/// k-th Hasse derivative: coefficient i-k of the result is C(i,k) * a_i.
/// k = 0 returns the polynomial unchanged.
inline DensePoly hasse_derivative(const DensePoly& f, u64 k) {
    if (k == 0) return f;
    if (f.is_zero() || f.degree() < k) return DensePoly::zero(f.ell());
    const u32 ell = f.ell();
    std::vector<u32> r(f.degree() - k + 1, 0);
    for (std::size_t i = k; i <= f.degree(); ++i) {
        if (f.coeff(i) == 0) continue;
        r[i - k] = static_cast<u32>(u64{binomial_mod_prime(i, k, ell)} * f.coeff(i) % ell);
    }
    return DensePoly(ell, std::move(r));
}

/// Value of the k-th Hasse derivative at x = 1 without materializing it.
inline u32 hasse_eval_at_one(const DensePoly& f, u64 k) {
    const u32 ell = f.ell();
    if (f.is_zero()) return 0;
    u64 s = 0;
    if (ell == 2) {
        // C(i,k) is odd iff k's set bits are contained in i's.
        for (std::size_t i = k; i <= f.degree(); ++i)
            if (f.coeff(i) && (i & k) == k) s ^= 1;
        return static_cast<u32>(s);
    }
    for (std::size_t i = k; i <= f.degree(); ++i) {
        if (f.coeff(i) == 0) continue;
        s = (s + u64{binomial_mod_prime(i, k, ell)} * f.coeff(i)) % ell;
    }
    return static_cast<u32>(s);
}

/// Multiplicity of 1 as a root of f: the smallest v such that the v-th Hasse
/// derivative does not vanish at 1. f must be nonzero.
inline u64 multiplicity_at_one(const DensePoly& f) {
    if (f.is_zero()) throw std::invalid_argument("multiplicity_at_one: zero polynomial");
    for (u64 k = 0; k <= f.degree(); ++k)
        if (hasse_eval_at_one(f, k) != 0) return k;
    throw std::logic_error("multiplicity_at_one: all derivatives vanished");
}

// ---------------------------------------------------------------------------
// Printing and parsing. Two interchange forms, both lossless:
//   sparse  "x^24388 + x^871 + 1", coefficients spelled as "c*x^e" when not 1
//   hex     fixed-width hex per coefficient, ascending degree
// ---------------------------------------------------------------------------

inline std::string to_sparse_string(const DensePoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = f.degree() + 1; i-- > 0;) {
        u32 c = f.coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) {
                out += std::to_string(c);
                out += "*";
            }
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

inline std::size_t hex_width_for(u32 ell) {
    std::size_t w = 0;
    u32 v = ell - 1;
    do {
        ++w;
        v >>= 4;
    } while (v);
    return w;
}

inline std::string to_hex_string(const DensePoly& f) {
    static const char* digits = "0123456789abcdef";
    if (f.is_zero()) return "";
    const std::size_t w = hex_width_for(f.ell());
    std::string out;
    out.reserve((f.degree() + 1) * w);
    for (std::size_t i = 0; i <= f.degree(); ++i) {
        u32 c = f.coeff(i);
        for (std::size_t k = w; k-- > 0;) out += digits[(c >> (4 * k)) & 0xf];
    }
    return out;
}

inline DensePoly parse_hex_poly(u32 ell, std::string_view s) {
    const std::size_t w = hex_width_for(ell);
    if (s.size() % w != 0) throw std::invalid_argument("parse_hex_poly: length not a multiple of the digit width");
    std::vector<u32> c(s.size() / w, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        u32 v = 0;
        for (std::size_t k = 0; k < w; ++k) {
            char ch = s[i * w + k];
            u32 d;
            if (ch >= '0' && ch <= '9') d = ch - '0';
            else if (ch >= 'a' && ch <= 'f') d = 10 + (ch - 'a');
            else throw std::invalid_argument("parse_hex_poly: bad hex digit");
            v = (v << 4) | d;
        }
        if (v >= ell) throw std::invalid_argument("parse_hex_poly: coefficient exceeds modulus");
        c[i] = v;
    }
    return DensePoly(ell, std::move(c));
}

inline DensePoly parse_sparse_poly(u32 ell, std::string_view s) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
        while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
        return v;
    };
    s = trim(s);
    if (s == "0") return DensePoly::zero(ell);
    std::vector<u32> coeffs;
    auto bump = [&](u64 e, u64 c) {
        if (e + 1 > coeffs.size()) coeffs.resize(e + 1, 0);
        coeffs[e] = static_cast<u32>((coeffs[e] + c) % ell);
    };
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t plus = s.find('+', pos);
        std::string_view term = trim(s.substr(pos, plus == std::string_view::npos ? plus : plus - pos));
        if (term.empty()) throw std::invalid_argument("parse_sparse_poly: empty term");
        u64 coef = 1, expo = 0;
        std::size_t star = term.find('*');
        std::string_view xpart = term;
        if (star != std::string_view::npos) {
            std::string_view cpart = trim(term.substr(0, star));
            auto [p1, ec1] = std::from_chars(cpart.data(), cpart.data() + cpart.size(), coef);
            if (ec1 != std::errc{} || p1 != cpart.data() + cpart.size())
                throw std::invalid_argument("parse_sparse_poly: bad coefficient");
            xpart = trim(term.substr(star + 1));
        }
        if (xpart.empty()) throw std::invalid_argument("parse_sparse_poly: empty factor");
        if (xpart[0] == 'x') {
            if (xpart.size() == 1) {
                expo = 1;
            } else {
                if (xpart[1] != '^') throw std::invalid_argument("parse_sparse_poly: expected '^'");
                std::string_view epart = xpart.substr(2);
                auto [p2, ec2] = std::from_chars(epart.data(), epart.data() + epart.size(), expo);
                if (ec2 != std::errc{} || p2 != epart.data() + epart.size())
                    throw std::invalid_argument("parse_sparse_poly: bad exponent");
            }
        } else {
            if (star != std::string_view::npos) throw std::invalid_argument("parse_sparse_poly: bad term");
            auto [p3, ec3] = std::from_chars(xpart.data(), xpart.data() + xpart.size(), coef);
            if (ec3 != std::errc{} || p3 != xpart.data() + xpart.size())
                throw std::invalid_argument("parse_sparse_poly: bad constant term");
            expo = 0;
        }
        bump(expo, coef % ell);
        if (plus == std::string_view::npos) break;
        pos = plus + 1;
    }
    return DensePoly(ell, std::move(coeffs));
}

inline bool poly_divides(const DensePoly& d, const DensePoly& f) {
    if (d.is_zero()) return f.is_zero();
    return poly_divmod(f, d).second.is_zero();
}

} // namespace geomseq

#endif // GEOMSEQ_POLY_HPP
