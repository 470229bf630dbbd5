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

// Command-line front end: generate sequences, measure linear complexity and
// autocorrelation, verify the closed-form predictions, and sweep parameter
// grids. All validation happens before any computation, and output files are
// written in one shot only after a command succeeds.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "geomseq/geomseq.hpp"

using namespace geomseq;
using nlohmann::json;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

u64 max_field_cap() {
    if (const char* env = std::getenv("GEOMSEQ_MAX_FIELD")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 9) return v;
        throw std::invalid_argument("GEOMSEQ_MAX_FIELD must be an integer >= 9");
    }
    return kDefaultMaxField;
}

struct RunConfig {
    u32 p = 0;
    u32 m = 0;
    u32 ell = 2;
    std::string A_spec = "nonresidue";
    std::optional<u64> e;
    std::vector<u32> poly; // empty: deterministic default
    std::string seq = "T";
    std::string format;
    std::string out_path;
    bool no_acf = false;
};

std::vector<u32> parse_u32_list(const std::string& s) {
    std::vector<u32> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok.empty()) throw std::invalid_argument("empty entry in list option");
        out.push_back(static_cast<u32>(std::stoul(tok)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

u32 resolve_A(const std::string& spec, u32 p, u32 ell, u32 g) {
    Cyclotomy C(p, ell, g);
    if (spec == "residue") {
        for (u32 a = 1; a < p; ++a)
            if (C.class_index(a) == 0) return a;
        throw std::invalid_argument("no residue A exists");
    }
    if (spec == "nonresidue") {
        for (u32 a = 1; a < p; ++a)
            if (C.class_index(a) != 0) return a;
        throw std::invalid_argument("no nonresidue A exists");
    }
    std::size_t used = 0;
    unsigned long v = std::stoul(spec, &used);
    if (used != spec.size() || v >= p)
        throw std::invalid_argument("--A must be 'residue', 'nonresidue' or a residue in [0, p)");
    return static_cast<u32>(v);
}

ExtField make_field(const RunConfig& cfg) {
    u64 cap = max_field_cap();
    if (!cfg.poly.empty()) return ExtField(cfg.p, cfg.m, cfg.poly, cap);
    return ExtField::with_default_poly(cfg.p, cfg.m, cap);
}

void write_output(const std::string& out_path, const std::string& data) {
    if (out_path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + out_path);
    os << data;
    if (!os) throw std::runtime_error("write failed for " + out_path);
}

SymbolSequence build_sequence(const ExtField& F, const RunConfig& cfg, u32 A) {
    if (cfg.seq == "T") return generalized_ntu(F, cfg.ell, A);
    if (cfg.seq == "t") return short_companion(F, cfg.ell, A);
    if (cfg.seq == "Tbar") return ntu_complement(F, cfg.ell, A);
    if (cfg.seq == "tbar") return ntu_complement(F, cfg.ell, A, true);
    if (cfg.seq == "Se") {
        if (!cfg.e) throw std::invalid_argument("--seq Se requires --e");
        return proposed_sequence(F, cfg.ell, A, *cfg.e);
    }
    throw std::invalid_argument("--seq must be one of T, t, Tbar, tbar, Se");
}

json params_json(const RunConfig& cfg, u32 A, const ExtField& F) {
    json j{{"p", cfg.p}, {"m", cfg.m}, {"ell", cfg.ell}, {"A", A}, {"seq", cfg.seq},
           {"poly", F.primitive_poly()}};
    if (cfg.e) j["e"] = *cfg.e;
    return j;
}

// ---------------------------------------------------------------------------

int cmd_gen(const RunConfig& cfg) {
    ExtField F = make_field(cfg);
    u32 A = resolve_A(cfg.A_spec, cfg.p, cfg.ell, F.g());
    SymbolSequence s = build_sequence(F, cfg, A);
    std::string format = cfg.format.empty() ? "text" : cfg.format;
    if (format == "text") {
        write_output(cfg.out_path, to_text(s));
    } else if (format == "bin") {
        auto bytes = to_binary(s);
        write_output(cfg.out_path, std::string(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
    } else {
        throw std::invalid_argument("gen supports --format text or bin");
    }
    return 0;
}

int cmd_lc(const RunConfig& cfg) {
    ExtField F = make_field(cfg);
    u32 A = resolve_A(cfg.A_spec, cfg.p, cfg.ell, F.g());
    SymbolSequence s = build_sequence(F, cfg, A);
    LcReport bm = berlekamp_massey(s);
    LcReport gc = minimal_poly_gcd(s);
    if (bm.linear_complexity != gc.linear_complexity || !(bm.minimal_poly == gc.minimal_poly)) {
        std::cerr << "error: berlekamp_massey and gcd disagree (L " << bm.linear_complexity << " vs "
                  << gc.linear_complexity << ")\n";
        return kExitViolation;
    }
    std::string format = cfg.format.empty() ? "text" : cfg.format;
    std::ostringstream os;
    if (format == "text") {
        os << "p " << cfg.p << " m " << cfg.m << " ell " << cfg.ell << " A " << A << " seq " << cfg.seq;
        if (cfg.e) os << " e " << *cfg.e;
        os << " period " << s.period() << "\n";
        os << "linear_complexity " << gc.linear_complexity << " (berlekamp_massey and gcd agree)\n";
        os << "minimal_poly " << to_sparse_string(gc.minimal_poly) << "\n";
    } else if (format == "csv") {
        os << "method,linear_complexity,minimal_poly,minimal_poly_hex\n";
        for (const LcReport* r : {&bm, &gc})
            os << lc_method_name(r->method) << ',' << r->linear_complexity << ','
               << to_sparse_string(r->minimal_poly) << ',' << to_hex_string(r->minimal_poly) << '\n';
    } else if (format == "json") {
        json j{{"schema", 1},
               {"kind", "lc"},
               {"params", params_json(cfg, A, F)},
               {"period", s.period()},
               {"reports", json::array()}};
        for (const LcReport* r : {&bm, &gc})
            j["reports"].push_back({{"method", lc_method_name(r->method)},
                                    {"linear_complexity", r->linear_complexity},
                                    {"minimal_poly", to_sparse_string(r->minimal_poly)},
                                    {"minimal_poly_hex", to_hex_string(r->minimal_poly)}});
        os << j.dump(2) << "\n";
    } else {
        throw std::invalid_argument("lc supports --format text, csv or json");
    }
    write_output(cfg.out_path, os.str());
    return 0;
}

int cmd_acf(const RunConfig& cfg) {
    ExtField F = make_field(cfg);
    u32 A = resolve_A(cfg.A_spec, cfg.p, cfg.ell, F.g());
    SymbolSequence s = build_sequence(F, cfg, A);
    CorrelationProfile prof = autocorrelation_profile(s);
    std::string format = cfg.format.empty() ? "csv" : cfg.format;
    std::ostringstream os;
    if (format == "csv" || format == "text") {
        os << profile_to_csv(prof);
    } else if (format == "json") {
        json j{{"schema", 1}, {"kind", "acf"}, {"params", params_json(cfg, A, F)},
               {"values", prof.values}, {"distribution", json::array()}};
        for (auto [v, c] : prof.distribution) j["distribution"].push_back({{"value", v}, {"count", c}});
        os << j.dump(2) << "\n";
    } else {
        throw std::invalid_argument("acf supports --format csv, text or json");
    }
    write_output(cfg.out_path, os.str());
    return 0;
}

struct TupleResult {
    std::vector<ReportRow> rows;
    bool violated = false;
    bool conjecture_violated = false;
};

std::string render_report(const std::vector<ReportRow>& rows, const std::string& format) {
    if (format == "csv") return report_csv(rows);
    if (format == "text" || format == "table") return report_table(rows);
    if (format == "json") {
        json j{{"schema", 1}, {"kind", "verify"}, {"rows", json::array()}};
        for (const ReportRow& r : rows) {
            json row{{"p", r.p},           {"m", r.m},
                     {"ell", r.ell},       {"A", r.A},
                     {"quantity", r.quantity}, {"applicability", r.applicability},
                     {"predicted", r.predicted}, {"measured", r.measured},
                     {"status", r.status}, {"detail", r.detail}};
            if (r.e) row["e"] = *r.e;
            else row["e"] = nullptr;
            j["rows"].push_back(std::move(row));
        }
        return j.dump(2) + "\n";
    }
    throw std::invalid_argument("verify/sweep support --format csv, text or json");
}

int cmd_verify(const RunConfig& cfg) {
    ExtField F = make_field(cfg);
    u32 A = resolve_A(cfg.A_spec, cfg.p, cfg.ell, F.g());
    TupleResult res;
    BaseMeasurements base = measure_base(F, cfg.ell, A);
    bool check_acf = !cfg.no_acf && cfg.e && cfg.ell == 2 && A != 0 && 2 * (F.q() - 1) <= 4000;
    for (const Prediction& pr : verify_tuple(F, cfg.ell, A, cfg.e, base, check_acf)) {
        res.rows.push_back(make_report_row(cfg.p, cfg.m, cfg.ell, A, cfg.e, pr));
        if (pr.status == PredictionStatus::violated) res.violated = true;
        if (pr.status == PredictionStatus::conjecture_violated) res.conjecture_violated = true;
    }
    write_output(cfg.out_path, render_report(res.rows, cfg.format.empty() ? "text" : cfg.format));
    if (res.conjecture_violated) std::cerr << "note: a conjecture-tagged prediction was violated (non-fatal)\n";
    return res.violated ? kExitViolation : 0;
}

struct SweepConfig {
    std::vector<u32> ps;
    std::vector<u32> ms;
    u32 ell = 2;
    std::string A_spec = "all";
    std::string e_spec = "none";
    std::string format = "csv";
    std::string out_path;
    unsigned jobs = 1;
    bool no_acf = false;
};

std::vector<std::optional<u64>> resolve_e_set(const std::string& spec, u64 N) {
    std::vector<std::optional<u64>> out;
    if (spec == "none") {
        out.push_back(std::nullopt);
        return out;
    }
    if (spec == "all") {
        for (u64 e = 0; e < N; ++e) out.push_back(e);
        return out;
    }
    std::size_t dots = spec.find("..");
    if (dots != std::string::npos) {
        u64 lo = std::stoull(spec.substr(0, dots));
        u64 hi = std::stoull(spec.substr(dots + 2));
        if (lo > hi || hi >= N) throw std::invalid_argument("--e range out of [0, N)");
        for (u64 e = lo; e <= hi; ++e) out.push_back(e);
        return out;
    }
    u64 e = std::stoull(spec);
    if (e >= N) throw std::invalid_argument("--e out of [0, N)");
    out.push_back(e);
    return out;
}

int cmd_sweep(const SweepConfig& sc) {
    struct Task {
        u32 p, m, A;
        std::vector<std::optional<u64>> es;
    };
    u64 cap = max_field_cap();
    std::vector<Task> tasks; // in canonical (p, m, A) order; e ascending inside
    for (u32 p : sc.ps) {
        for (u32 m : sc.ms) {
            ExtField F = ExtField::with_default_poly(p, m, cap); // validates the tuple up front
            if ((p - 1) % sc.ell != 0)
                throw std::invalid_argument("ell must divide p-1 for every swept p");
            std::vector<u32> As;
            if (sc.A_spec == "all") {
                for (u32 a = 1; a < p; ++a) As.push_back(a);
            } else {
                As.push_back(resolve_A(sc.A_spec, p, sc.ell, F.g()));
            }
            auto es = resolve_e_set(sc.e_spec, F.q() - 1);
            for (u32 A : As) tasks.push_back(Task{p, m, A, es});
        }
    }

    std::vector<TupleResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex err_mu;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size() || failed.load()) return;
            const Task& t = tasks[i];
            try {
                ExtField F = ExtField::with_default_poly(t.p, t.m, cap);
                TupleResult agg;
                BaseMeasurements base = measure_base(F, sc.ell, t.A);
                for (auto e : t.es) {
                    bool check_acf =
                        !sc.no_acf && e && sc.ell == 2 && t.A != 0 && 2 * (F.q() - 1) <= 4000;
                    for (const Prediction& pr : verify_tuple(F, sc.ell, t.A, e, base, check_acf)) {
                        agg.rows.push_back(make_report_row(t.p, t.m, sc.ell, t.A, e, pr));
                        if (pr.status == PredictionStatus::violated) agg.violated = true;
                        if (pr.status == PredictionStatus::conjecture_violated) agg.conjecture_violated = true;
                    }
                }
                results[i] = std::move(agg);
            } catch (const std::exception& ex) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!failed.exchange(true)) first_error = ex.what();
            }
        }
    };
    unsigned jobs = std::max(1u, sc.jobs);
    std::vector<std::thread> pool;
    for (unsigned k = 0; k + 1 < jobs && k + 1 < tasks.size(); ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failed.load()) throw std::runtime_error(first_error);

    std::vector<ReportRow> rows;
    bool violated = false, conj = false;
    for (const TupleResult& r : results) {
        rows.insert(rows.end(), r.rows.begin(), r.rows.end());
        violated = violated || r.violated;
        conj = conj || r.conjecture_violated;
    }
    write_output(sc.out_path, render_report(rows, sc.format));
    if (conj) std::cerr << "note: conjecture-tagged prediction(s) violated (non-fatal)\n";
    return violated ? kExitViolation : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized NTU sequence toolkit: generation, linear complexity, correlation, verification"};
    app.require_subcommand(1);

    RunConfig cfg;
    SweepConfig sweep;
    std::string poly_spec, e_spec;

    auto add_common = [&](CLI::App* sub, bool needs_seq) {
        sub->add_option("--p", cfg.p, "odd prime characteristic")->required();
        sub->add_option("--m", cfg.m, "extension degree (> 1)")->required();
        sub->add_option("--ell", cfg.ell, "alphabet size, a prime divisor of p-1 (default 2)");
        sub->add_option("--A", cfg.A_spec, "shift parameter: literal, 'residue' or 'nonresidue'");
        sub->add_option("--e", e_spec, "interleaving shift in [0, p^m-1)");
        sub->add_option("--poly", poly_spec, "modulus override, ascending coefficients, constant first");
        if (needs_seq) sub->add_option("--seq", cfg.seq, "sequence family: T, t, Tbar, tbar, Se");
        sub->add_option("--format", cfg.format, "output format");
        sub->add_option("--out", cfg.out_path, "output path (stdout when absent)");
    };

    CLI::App* gen = app.add_subcommand("gen", "generate one period of a sequence");
    add_common(gen, true);
    CLI::App* lc = app.add_subcommand("lc", "linear complexity by both methods, agreement asserted");
    add_common(lc, true);
    CLI::App* acf = app.add_subcommand("acf", "periodic autocorrelation profile (exact integers)");
    add_common(acf, true);
    CLI::App* verify = app.add_subcommand("verify", "closed-form predictions vs measurement for one tuple");
    add_common(verify, false);
    verify->add_flag("--no-acf", cfg.no_acf, "skip the autocorrelation profile check");

    CLI::App* sw = app.add_subcommand("sweep", "verification report over a parameter grid");
    std::string p_list, m_list;
    sw->add_option("--p", p_list, "comma-separated primes")->required();
    sw->add_option("--m", m_list, "comma-separated extension degrees")->required();
    sw->add_option("--ell", sweep.ell, "alphabet size (default 2)");
    sw->add_option("--A", sweep.A_spec, "'all', 'residue', 'nonresidue' or a literal (default all)");
    sw->add_option("--e", sweep.e_spec, "'all', 'none', a literal, or lo..hi (default none)");
    sw->add_option("--jobs", sweep.jobs, "parallel workers (default 1)");
    sw->add_option("--format", sweep.format, "csv, text or json (default csv)");
    sw->add_option("--out", sweep.out_path, "output path (stdout when absent)");
    sw->add_flag("--no-acf", sweep.no_acf, "skip autocorrelation profile checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!poly_spec.empty()) cfg.poly = parse_u32_list(poly_spec);
        if (!e_spec.empty()) cfg.e = std::stoull(e_spec);
        if (gen->parsed()) return cmd_gen(cfg);
        if (lc->parsed()) return cmd_lc(cfg);
        if (acf->parsed()) return cmd_acf(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (sw->parsed()) {
            sweep.ps = parse_u32_list(p_list);
            sweep.ms = parse_u32_list(m_list);
            return cmd_sweep(sweep);
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
