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

#ifndef GEOMSEQ_REPORT_HPP
#define GEOMSEQ_REPORT_HPP

#include <algorithm>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "geomseq/theorems.hpp"

namespace geomseq {

/// One verification report row: tuple parameters plus a prediction outcome.
struct ReportRow {
    u32 p = 0, m = 0, ell = 0, A = 0;
    std::optional<u64> e;
    std::string quantity;
    std::string applicability;
    std::string predicted;
    std::string measured;
    std::string status;
    std::string detail;
};

inline ReportRow make_report_row(u32 p, u32 m, u32 ell, u32 A, std::optional<u64> e, const Prediction& pr) {
    ReportRow row;
    row.p = p;
    row.m = m;
    row.ell = ell;
    row.A = A;
    row.e = e;
    row.quantity = quantity_name(pr.quantity);
    row.applicability = pr.applicability;
    if (pr.predicted_lc) row.predicted = std::to_string(*pr.predicted_lc);
    else if (pr.predicted_poly) row.predicted = *pr.predicted_poly;
    if (pr.measured_lc) row.measured = std::to_string(*pr.measured_lc);
    else if (pr.measured_poly) row.measured = *pr.measured_poly;
    row.status = status_name(pr.status);
    row.detail = pr.detail;
    return row;
}

namespace detail {

// Report fields never legitimately contain commas; scrub just in case so the
// CSV stays one-cell-per-column.
inline std::string csv_safe(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    return s;
}

} // namespace detail

inline std::string report_csv(std::span<const ReportRow> rows) {
    std::ostringstream os;
    os << "p,m,ell,A,e,quantity,applicability,predicted,measured,status,detail\n";
    for (const ReportRow& r : rows) {
        os << r.p << ',' << r.m << ',' << r.ell << ',' << r.A << ',';
        if (r.e) os << *r.e;
        os << ',' << detail::csv_safe(r.quantity) << ',' << detail::csv_safe(r.applicability) << ','
           << detail::csv_safe(r.predicted) << ',' << detail::csv_safe(r.measured) << ','
           << detail::csv_safe(r.status) << ',' << detail::csv_safe(r.detail) << '\n';
    }
    return os.str();
}

inline std::string report_table(std::span<const ReportRow> rows) {
    std::vector<std::string> headers = {"p", "m", "ell", "A", "e", "quantity", "applicability",
                                        "predicted", "measured", "status", "detail"};
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows.size());
    for (const ReportRow& r : rows) {
        cells.push_back({std::to_string(r.p), std::to_string(r.m), std::to_string(r.ell), std::to_string(r.A),
                         r.e ? std::to_string(*r.e) : "-", r.quantity, r.applicability, r.predicted, r.measured,
                         r.status, r.detail});
    }
    std::vector<std::size_t> width(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) {
        width[c] = headers[c].size();
        for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << row[c];
            if (c + 1 < row.size()) os << std::string(width[c] - row[c].size() + 2, ' ');
        }
        os << '\n';
    };
    emit(headers);
    std::size_t total = 0;
    for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + (c + 1 < width.size() ? 2 : 0);
    os << std::string(total, '-') << '\n';
    for (const auto& row : cells) emit(row);
    return os.str();
}

} // namespace geomseq

#endif // GEOMSEQ_REPORT_HPP
