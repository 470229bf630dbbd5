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

#ifndef GEOMSEQ_SEQUENCE_HPP
#define GEOMSEQ_SEQUENCE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "geomseq/bitvec.hpp"
#include "geomseq/common.hpp"
#include "geomseq/cyclotomy.hpp"
#include "geomseq/field.hpp"

namespace geomseq {

/// Construction parameters carried by every sequence so that outputs are
/// self-describing. Fields are zero/empty when not applicable.
struct SeqParams {
    u32 p = 0;
    u32 m = 0;
    u32 ell = 0;
    u32 A = 0;
    std::optional<u64> e;
    std::vector<u32> poly; // modulus used, ascending, including the leading 1
    std::string tag;       // construction name: "T", "t", "Tbar", "tbar", "Se", ...

    bool operator==(const SeqParams&) const = default;
};

/// One full period of a sequence over F_ell. Indexing wraps modulo the
/// period. Storage is bit-packed for ell = 2 and a byte-per-symbol vector
/// otherwise. Immutable after construction.
///
/// The stored period is the construction period (the window every analysis
/// runs over); least_period() reports the true smallest one, which can be a
/// proper divisor in degenerate small-p cases.
class SymbolSequence {
public:
    SymbolSequence(u32 ell, std::span<const u32> symbols, SeqParams params = {})
        : ell_(ell), period_(symbols.size()), params_(std::move(params)) {
        if (!is_prime(ell)) throw std::invalid_argument("SymbolSequence: alphabet size must be prime");
        if (symbols.empty()) throw std::invalid_argument("SymbolSequence: empty period");
        for (u32 s : symbols)
            if (s >= ell) throw std::invalid_argument("SymbolSequence: symbol out of alphabet");
        params_.ell = ell_;
        if (ell_ == 2) {
            bits_ = BitVec(period_);
            for (std::size_t i = 0; i < period_; ++i) bits_.set(i, symbols[i] != 0);
        } else {
            syms_.assign(symbols.begin(), symbols.end());
        }
    }

    u32 ell() const { return ell_; }
    u64 period() const { return period_; }
    const SeqParams& params() const { return params_; }

    u32 at(u64 n) const {
        n %= period_;
        return ell_ == 2 ? static_cast<u32>(bits_.get(n)) : syms_[n];
    }
    u32 operator[](u64 n) const { return at(n); }

    /// Bit-packed view; only meaningful for binary sequences.
    const BitVec& bits() const {
        if (ell_ != 2) throw std::logic_error("SymbolSequence: bit view requires ell = 2");
        return bits_;
    }

    std::vector<u32> to_vector() const {
        std::vector<u32> v(period_);
        for (u64 i = 0; i < period_; ++i) v[i] = at(i);
        return v;
    }

    /// Smallest d dividing period() such that the sequence is d-periodic.
    u64 least_period() const {
        for (u64 d = 1; d <= period_ / 2; ++d) {
            if (period_ % d != 0) continue;
            bool ok = true;
            for (u64 n = 0; n + d < period_ && ok; ++n) ok = at(n) == at(n + d);
            if (ok) return d;
        }
        return period_;
    }

    /// Symbol equality (alphabet, period, symbols); params are not compared.
    bool same_symbols(const SymbolSequence& o) const {
        return ell_ == o.ell_ && period_ == o.period_ &&
               (ell_ == 2 ? bits_ == o.bits_ : syms_ == o.syms_);
    }

    bool operator==(const SymbolSequence& o) const { return same_symbols(o) && params_ == o.params_; }

private:
    u32 ell_;
    u64 period_;
    BitVec bits_;
    std::vector<u32> syms_;
    SeqParams params_;
};

// ---------------------------------------------------------------------------
// Constructions.
// ---------------------------------------------------------------------------

/// m-sequence over F_p: R_n = Tr(omega^n) for n = 0..p^m-2, generated with
/// one O(m) multiplication by omega per step.
inline std::vector<u32> m_sequence(const ExtField& F) {
    std::vector<u32> R(F.q() - 1);
    ExtField::Elem a = F.one();
    for (u64 n = 0; n + 1 < F.q(); ++n) {
        R[n] = F.trace(a);
        F.mul_by_omega(a);
    }
    return R;
}

/// Feedforward map: 0 if x + A = 0, otherwise the cyclotomic class index of
/// x + A.
inline u32 ntu_map(u32 x, u32 A, const Cyclotomy& C) {
    u32 y = (x + A) % C.p();
    return y == 0 ? 0 : C.class_index(y);
}

/// Complemented map: ntu_map shifted down by k = class of A (A != 0). For
/// A = 0 only ell = 2 is supported, where the complement means bit flip.
inline u32 ntu_complement_map(u32 x, u32 A, const Cyclotomy& C) {
    u32 k;
    if (A % C.p() == 0) {
        if (C.d() != 2)
            throw std::invalid_argument("ntu_complement_map: complement undefined for A = 0 with ell > 2");
        k = 1;
    } else {
        k = C.class_index(A);
    }
    return (ntu_map(x, A, C) + C.d() - k) % C.d();
}

namespace detail {

inline void validate_ntu_args(const ExtField& F, u32 ell, u32 A) {
    if (!is_prime(ell) || (F.p() - 1) % ell != 0)
        throw std::invalid_argument("ntu: ell must be a prime divisor of p-1");
    if (A >= F.p()) throw std::invalid_argument("ntu: A must be reduced mod p");
}

inline SeqParams make_params(const ExtField& F, u32 ell, u32 A, std::string tag) {
    SeqParams pr;
    pr.p = F.p();
    pr.m = F.m();
    pr.ell = ell;
    pr.A = A;
    pr.poly = F.primitive_poly();
    pr.tag = std::move(tag);
    return pr;
}

} // namespace detail

/// The sequence T_A: the m-sequence passed through ntu_map. Period is
/// p^m - 1 for A != 0 and ell*(p^m-1)/(p-1) for A = 0.
inline SymbolSequence generalized_ntu(const ExtField& F, u32 ell, u32 A) {
    detail::validate_ntu_args(F, ell, A);
    Cyclotomy C(F.p(), ell, F.g());
    u64 period = A == 0 ? u64{ell} * F.nu() : F.q() - 1;
    std::vector<u32> sym(period);
    ExtField::Elem a = F.one();
    for (u64 n = 0; n < period; ++n) {
        sym[n] = ntu_map(F.trace(a), A, C);
        F.mul_by_omega(a);
    }
    return SymbolSequence(ell, sym, detail::make_params(F, ell, A, "T"));
}

/// The short companion t_A: ntu_map applied to the powers of g, one period
/// of length p - 1. For A = 1 this is the classical Sidel'nikov sequence.
inline SymbolSequence short_companion(const ExtField& F, u32 ell, u32 A) {
    detail::validate_ntu_args(F, ell, A);
    Cyclotomy C(F.p(), ell, F.g());
    std::vector<u32> sym(F.p() - 1);
    u64 x = 1;
    for (u32 n = 0; n < F.p() - 1; ++n) {
        sym[n] = ntu_map(static_cast<u32>(x), A, C);
        x = x * F.g() % F.p();
    }
    return SymbolSequence(ell, sym, detail::make_params(F, ell, A, "t"));
}

/// Every symbol shifted by -k in F_ell; for ell = 2 and k = 1 this is the
/// bitwise complement.
inline SymbolSequence complement_sequence(const SymbolSequence& s, u32 k) {
    k %= s.ell();
    std::vector<u32> sym(s.period());
    for (u64 n = 0; n < s.period(); ++n) sym[n] = (s.at(n) + s.ell() - k) % s.ell();
    SeqParams pr = s.params();
    if (!pr.tag.empty()) pr.tag += "bar";
    return SymbolSequence(s.ell(), sym, std::move(pr));
}

/// T_A-bar / t_A-bar per the complemented map (shift by the class of A).
inline SymbolSequence ntu_complement(const ExtField& F, u32 ell, u32 A, bool short_variant = false) {
    detail::validate_ntu_args(F, ell, A);
    Cyclotomy C(F.p(), ell, F.g());
    u32 k;
    if (A == 0) {
        if (ell != 2) throw std::invalid_argument("ntu_complement: complement undefined for A = 0 with ell > 2");
        k = 1;
    } else {
        k = C.class_index(A);
    }
    return complement_sequence(short_variant ? short_companion(F, ell, A) : generalized_ntu(F, ell, A), k);
}

inline SymbolSequence left_cyclic_shift(const SymbolSequence& s, u64 e) {
    std::vector<u32> sym(s.period());
    for (u64 n = 0; n < s.period(); ++n) sym[n] = s.at(n + e);
    SeqParams pr = s.params();
    return SymbolSequence(s.ell(), sym, std::move(pr));
}

/// Interleaved sequence of an ordered family of equal-period sequences:
/// U_{j*T + i} = S^(i)_j.
inline SymbolSequence interleave(std::span<const SymbolSequence> family) {
    if (family.empty()) throw std::invalid_argument("interleave: empty family");
    const u64 N = family[0].period();
    const u32 ell = family[0].ell();
    for (const auto& s : family)
        if (s.period() != N || s.ell() != ell)
            throw std::invalid_argument("interleave: family members must share period and alphabet");
    const u64 T = family.size();
    std::vector<u32> sym(N * T);
    for (u64 j = 0; j < N; ++j)
        for (u64 i = 0; i < T; ++i) sym[j * T + i] = family[i].at(j);
    SeqParams pr = family[0].params();
    pr.tag = "interleaved";
    return SymbolSequence(ell, sym, std::move(pr));
}

inline std::vector<SymbolSequence> deinterleave(const SymbolSequence& s, u64 count) {
    if (count == 0 || s.period() % count != 0)
        throw std::invalid_argument("deinterleave: count must divide the period");
    const u64 N = s.period() / count;
    std::vector<SymbolSequence> out;
    out.reserve(count);
    for (u64 i = 0; i < count; ++i) {
        std::vector<u32> sym(N);
        for (u64 j = 0; j < N; ++j) sym[j] = s.at(j * count + i);
        out.emplace_back(s.ell(), sym, SeqParams{});
    }
    return out;
}

/// The balanced interleaved sequence S^e: T_A merged with the e-shifted
/// binary complement of T_A, period 2(p^m - 1). Binary only; the complement
/// here is always the bit flip, which is what makes one period balanced.
inline SymbolSequence proposed_sequence(const ExtField& F, u32 ell, u32 A, u64 e) {
    if (ell != 2) throw std::invalid_argument("proposed_sequence: requires ell = 2");
    detail::validate_ntu_args(F, ell, A);
    const u64 N = F.q() - 1;
    if (e >= N) throw std::invalid_argument("proposed_sequence: e must lie in [0, p^m-1)");
    SymbolSequence T = generalized_ntu(F, ell, A);
    // For A = 0 the construction period is shorter than N; expand to the
    // common interleaving period.
    std::vector<u32> base(N), comp(N);
    for (u64 n = 0; n < N; ++n) base[n] = T.at(n);
    for (u64 n = 0; n < N; ++n) comp[n] = 1 - base[(n + e) % N];
    std::vector<u32> sym(2 * N);
    for (u64 j = 0; j < N; ++j) {
        sym[2 * j] = base[j];
        sym[2 * j + 1] = comp[j];
    }
    SeqParams pr = detail::make_params(F, ell, A, "Se");
    pr.e = e;
    return SymbolSequence(ell, sym, std::move(pr));
}

/// Occurrence count of each symbol in one period.
inline std::vector<u64> balance_count(const SymbolSequence& s) {
    std::vector<u64> c(s.ell(), 0);
    for (u64 n = 0; n < s.period(); ++n) ++c[s.at(n)];
    return c;
}

// ---------------------------------------------------------------------------
// Serialization. Text form:
//
//     geomseq 1
//     p 3 m 2 ell 2 A 1 e 2 poly 2,2,1 tag Se period 16
//     0110001111010100
//
// Optional header fields are omitted when absent. Symbols are digits for
// alphabets up to 10 and space-separated decimals beyond. The binary form is
// bit-packed (LSB first) and restricted to ell = 2. Both round-trip exactly.
// ---------------------------------------------------------------------------

inline std::string to_text(const SymbolSequence& s) {
    std::ostringstream os;
    os << "geomseq 1\n";
    const SeqParams& pr = s.params();
    os << "p " << pr.p << " m " << pr.m << " ell " << s.ell() << " A " << pr.A;
    if (pr.e) os << " e " << *pr.e;
    if (!pr.poly.empty()) {
        os << " poly ";
        for (std::size_t i = 0; i < pr.poly.size(); ++i) {
            if (i) os << ',';
            os << pr.poly[i];
        }
    }
    if (!pr.tag.empty()) os << " tag " << pr.tag;
    os << " period " << s.period() << "\n";
    if (s.ell() <= 10) {
        for (u64 n = 0; n < s.period(); ++n) os << s.at(n);
    } else {
        for (u64 n = 0; n < s.period(); ++n) {
            if (n) os << ' ';
            os << s.at(n);
        }
    }
    os << "\n";
    return os.str();
}

inline SymbolSequence from_text(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string magic;
    int version = 0;
    is >> magic >> version;
    if (magic != "geomseq" || version != 1) throw std::invalid_argument("from_text: bad header");
    SeqParams pr;
    u32 ell = 0;
    u64 period = 0;
    std::string key;
    while (is >> key) {
        if (key == "p") is >> pr.p;
        else if (key == "m") is >> pr.m;
        else if (key == "ell") { is >> ell; pr.ell = ell; }
        else if (key == "A") is >> pr.A;
        else if (key == "e") { u64 e; is >> e; pr.e = e; }
        else if (key == "poly") {
            std::string list;
            is >> list;
            std::size_t pos = 0;
            while (pos <= list.size()) {
                std::size_t comma = list.find(',', pos);
                pr.poly.push_back(static_cast<u32>(std::stoul(list.substr(pos, comma - pos))));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        } else if (key == "tag") is >> pr.tag;
        else if (key == "period") { is >> period; break; }
        else throw std::invalid_argument("from_text: unknown header field '" + key + "'");
    }
    if (ell == 0 || period == 0) throw std::invalid_argument("from_text: missing ell or period");
    std::vector<u32> sym;
    sym.reserve(period);
    if (ell <= 10) {
        std::string body;
        is >> body;
        if (body.size() != period) throw std::invalid_argument("from_text: body length does not match period");
        for (char ch : body) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("from_text: bad symbol digit");
            sym.push_back(static_cast<u32>(ch - '0'));
        }
    } else {
        u32 v;
        while (sym.size() < period && is >> v) sym.push_back(v);
        if (sym.size() != period) throw std::invalid_argument("from_text: body length does not match period");
    }
    return SymbolSequence(ell, sym, std::move(pr));
}

inline std::vector<u8> to_binary(const SymbolSequence& s) {
    if (s.ell() != 2) throw std::invalid_argument("to_binary: bit-packed form requires ell = 2");
    std::vector<u8> out;
    auto put32 = [&](u32 v) {
        for (int k = 0; k < 4; ++k) out.push_back(static_cast<u8>(v >> (8 * k)));
    };
    auto put64 = [&](u64 v) {
        for (int k = 0; k < 8; ++k) out.push_back(static_cast<u8>(v >> (8 * k)));
    };
    out.insert(out.end(), {'G', 'S', 'Q', 'B', 1});
    const SeqParams& pr = s.params();
    put32(pr.p);
    put32(pr.m);
    put32(s.ell());
    put32(pr.A);
    out.push_back(pr.e ? 1 : 0);
    put64(pr.e ? *pr.e : 0);
    put32(static_cast<u32>(pr.poly.size()));
    for (u32 c : pr.poly) put32(c);
    put32(static_cast<u32>(pr.tag.size()));
    for (char ch : pr.tag) out.push_back(static_cast<u8>(ch));
    put64(s.period());
    u8 acc = 0;
    for (u64 n = 0; n < s.period(); ++n) {
        if (s.at(n)) acc |= static_cast<u8>(1u << (n & 7));
        if ((n & 7) == 7) {
            out.push_back(acc);
            acc = 0;
        }
    }
    if (s.period() & 7) out.push_back(acc);
    return out;
}

inline SymbolSequence from_binary(std::span<const u8> data) {
    std::size_t pos = 0;
    auto need = [&](std::size_t n) {
        if (pos + n > data.size()) throw std::invalid_argument("from_binary: truncated input");
    };
    auto get32 = [&]() {
        need(4);
        u32 v = 0;
        for (int k = 0; k < 4; ++k) v |= u32{data[pos++]} << (8 * k);
        return v;
    };
    auto get64 = [&]() {
        need(8);
        u64 v = 0;
        for (int k = 0; k < 8; ++k) v |= u64{data[pos++]} << (8 * k);
        return v;
    };
    need(5);
    if (data[0] != 'G' || data[1] != 'S' || data[2] != 'Q' || data[3] != 'B' || data[4] != 1)
        throw std::invalid_argument("from_binary: bad magic");
    pos = 5;
    SeqParams pr;
    pr.p = get32();
    pr.m = get32();
    u32 ell = get32();
    pr.ell = ell;
    pr.A = get32();
    need(1);
    bool has_e = data[pos++] != 0;
    u64 e = get64();
    if (has_e) pr.e = e;
    u32 plen = get32();
    for (u32 i = 0; i < plen; ++i) pr.poly.push_back(get32());
    u32 tlen = get32();
    need(tlen);
    pr.tag.assign(reinterpret_cast<const char*>(data.data() + pos), tlen);
    pos += tlen;
    u64 period = get64();
    need((period + 7) / 8);
    std::vector<u32> sym(period);
    for (u64 n = 0; n < period; ++n) sym[n] = (data[pos + (n >> 3)] >> (n & 7)) & 1;
    return SymbolSequence(ell, sym, std::move(pr));
}

} // namespace geomseq

#endif // GEOMSEQ_SEQUENCE_HPP
