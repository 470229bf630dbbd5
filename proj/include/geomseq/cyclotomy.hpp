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

#ifndef GEOMSEQ_CYCLOTOMY_HPP
#define GEOMSEQ_CYCLOTOMY_HPP

#include <vector>

#include "geomseq/common.hpp"
#include "geomseq/field.hpp"

namespace geomseq {

/// Cyclotomic classes of order d in F_p with respect to a primitive element
/// g: D_0 is the set of d-th power residues, D_j = g^j D_0. The classes
/// partition F_p \ {0} into d sets of size (p-1)/d.
///
/// class_index(x) is the discrete log of x base g reduced mod d; the table is
/// built by one walk through the powers of g (p is small here, so a size-p
/// table is the whole cost). Immutable after construction.
class Cyclotomy {
public:
    Cyclotomy(u32 p, u32 d, u32 g) : p_(p), d_(d), g_(g) {
        if (p < 3 || !is_prime(p)) throw std::invalid_argument("Cyclotomy: p must be an odd prime");
        if (d == 0 || (p - 1) % d != 0) throw std::invalid_argument("Cyclotomy: d must divide p-1");
        if (g == 0 || g >= p || multiplicative_order(g, p) != p - 1)
            throw std::invalid_argument("Cyclotomy: g must be a primitive element of F_p");
        class_of_.assign(p, kNoClass);
        u64 x = 1;
        for (u32 n = 0; n < p - 1; ++n) {
            class_of_[static_cast<u32>(x)] = n % d;
            x = x * g % p;
        }
    }

    u32 p() const { return p_; }
    u32 d() const { return d_; }
    u32 g() const { return g_; }

    /// Index j of the class D_j containing x. Zero belongs to no class.
    u32 class_index(u32 x) const {
        x %= p_;
        if (x == 0) throw std::domain_error("Cyclotomy: 0 lies in no cyclotomic class");
        return class_of_[x];
    }

    /// Difference parameter d(i, j; a) = #(D_i intersect (D_j - a)),
    /// computed by direct set intersection. a = 0 is allowed (D_j - 0 = D_j).
    u64 difference_parameter(u32 i, u32 j, u32 a) const {
        if (i >= d_ || j >= d_) throw std::invalid_argument("difference_parameter: class index out of range");
        a %= p_;
        u64 count = 0;
        for (u32 x = 1; x < p_; ++x) {
            if (class_of_[x] != i) continue;
            u32 y = (x + a) % p_;
            if (y != 0 && class_of_[y] == j) ++count;
        }
        return count;
    }

private:
    static constexpr u32 kNoClass = 0xffffffffu;
    u32 p_, d_, g_;
    std::vector<u32> class_of_;
};

} // namespace geomseq

#endif // GEOMSEQ_CYCLOTOMY_HPP
