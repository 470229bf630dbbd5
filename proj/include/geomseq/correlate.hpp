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

#ifndef GEOMSEQ_CORRELATE_HPP
#define GEOMSEQ_CORRELATE_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "geomseq/sequence.hpp"

namespace geomseq {

/// All periodic correlation values of a binary sequence plus their value
/// distribution. values[tau] = R(tau) for tau in [0, N); always exact
/// integers, R(0) = N by construction.
struct CorrelationProfile {
    std::vector<i64> values;
    std::vector<std::pair<i64, u64>> distribution; // (value, count), ascending by value
    SeqParams params;
};

namespace detail {

inline void require_binary(const SymbolSequence& s, const char* who) {
    if (s.ell() != 2) throw std::invalid_argument(std::string(who) + ": correlation requires ell = 2");
}

} // namespace detail

/// Periodic cross-correlation sum_{i} (-1)^(a_i + b_{i+tau}) over one period.
/// Out-of-range tau is reduced mod the common period N.
inline i64 cross_correlation(const SymbolSequence& a, const SymbolSequence& b, i64 tau) {
    detail::require_binary(a, "cross_correlation");
    detail::require_binary(b, "cross_correlation");
    if (a.period() != b.period())
        throw std::invalid_argument("cross_correlation: sequences must share one period length");
    const u64 N = a.period();
    u64 t = mod_floor(tau, N);
    BitVec bb = doubled(b.bits());
    u64 diff = hamming_distance_rotated(a.bits(), bb, t);
    return static_cast<i64>(N) - 2 * static_cast<i64>(diff);
}

/// Autocorrelation at every shift; O(N^2/w) by word-parallel popcount.
inline CorrelationProfile autocorrelation_profile(const SymbolSequence& s) {
    detail::require_binary(s, "autocorrelation_profile");
    const u64 N = s.period();
    CorrelationProfile prof;
    prof.params = s.params();
    prof.values.resize(N);
    BitVec bb = doubled(s.bits());
    for (u64 tau = 0; tau < N; ++tau) {
        u64 diff = hamming_distance_rotated(s.bits(), bb, tau);
        prof.values[tau] = static_cast<i64>(N) - 2 * static_cast<i64>(diff);
    }
    std::map<i64, u64> dist;
    for (i64 v : prof.values) ++dist[v];
    prof.distribution.assign(dist.begin(), dist.end());
    return prof;
}

/// CSV with exact integer columns tau,value.
inline std::string profile_to_csv(const CorrelationProfile& prof) {
    std::ostringstream os;
    os << "tau,value\n";
    for (std::size_t tau = 0; tau < prof.values.size(); ++tau)
        os << tau << ',' << prof.values[tau] << '\n';
    return os.str();
}

} // namespace geomseq

#endif // GEOMSEQ_CORRELATE_HPP
