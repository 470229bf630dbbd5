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

#ifndef GEOMSEQ_BITVEC_HPP
#define GEOMSEQ_BITVEC_HPP

#include <bit>
#include <cstddef>
#include <vector>

#include "geomseq/common.hpp"

namespace geomseq {

// Fixed-length bit vector, LSB-first within 64-bit words. Backbone of the
// binary fast paths (packed sequences, GF(2) polynomials, correlation).
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void set(std::size_t i, bool v) {
        if (v)
            w_[i >> 6] |= u64{1} << (i & 63);
        else
            w_[i >> 6] &= ~(u64{1} << (i & 63));
    }

    u64 word(std::size_t k) const { return w_[k]; }

    u64 popcount() const {
        u64 c = 0;
        for (u64 w : w_) c += static_cast<u64>(std::popcount(w));
        return c;
    }

    // 64 bits starting at bit position pos; positions past size() read as 0.
    u64 extract64(std::size_t pos) const {
        std::size_t k = pos >> 6, off = pos & 63;
        u64 lo = k < w_.size() ? w_[k] : 0;
        if (off == 0) return lo;
        u64 hi = k + 1 < w_.size() ? w_[k + 1] : 0;
        return (lo >> off) | (hi << (64 - off));
    }

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    std::size_t n_ = 0;
    std::vector<u64> w_;
};

// Hamming distance between a and b cyclically rotated left by rot,
// i.e. #{ i : a_i != b_{(i+rot) mod n} }. bb must be b doubled (b || b).
inline u64 hamming_distance_rotated(const BitVec& a, const BitVec& bb, std::size_t rot) {
    const std::size_t n = a.size();
    u64 diff = 0;
    std::size_t full = n / 64;
    for (std::size_t k = 0; k < full; ++k)
        diff += static_cast<u64>(std::popcount(a.word(k) ^ bb.extract64(rot + 64 * k)));
    if (std::size_t rem = n & 63) {
        u64 mask = (u64{1} << rem) - 1;
        diff += static_cast<u64>(std::popcount((a.word(full) ^ bb.extract64(rot + 64 * full)) & mask));
    }
    return diff;
}

inline BitVec doubled(const BitVec& b) {
    BitVec d(2 * b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b.get(i)) {
            d.set(i, true);
            d.set(i + b.size(), true);
        }
    return d;
}

} // namespace geomseq

#endif // GEOMSEQ_BITVEC_HPP
