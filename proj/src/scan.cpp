#include "pentaform/scan.hpp"

#include <omp.h>

#include <chrono>
#include <nlohmann/json.hpp>
#include <sstream>

namespace pentaform {

std::string to_string(ScanCheck c) {
    switch (c) {
        case ScanCheck::Agreed: return "agreed";
        case ScanCheck::Skipped: return "skipped";
        case ScanCheck::Mismatch: return "mismatch";
    }
    return "unknown";
}

std::vector<FormParams> scan_corpus(i64 max_abc, int max_r, int max_s) {
    if (max_abc < 1 || max_abc > kMaxCoefficient || max_s < 0 || max_s > kMaxExponent || max_r < 0)
        throw RangeError("scan_corpus: bounds outside caps");
    std::vector<FormParams> out;
    for (i64 a = 1; a <= max_abc; a += 2) {
        for (i64 b = 1; b <= max_abc; b += 2) {
            for (i64 c = 1; c <= max_abc; c += 2) {
                for (int r = 0; r <= std::min(max_r, max_s); ++r) {
                    for (int s = r; s <= max_s; ++s) {
                        try {
                            out.push_back(make_params(a, b, c, r, s));
                        } catch (const ParamError&) {
                        }
                    }
                }
            }
        }
    }
    return out;
}

bool is_contradiction(VerdictKind v, Empirical e) {
    if (v == VerdictKind::AlmostUniversal) return e != Empirical::LikelyAU;
    if (v == VerdictKind::NotAlmostUniversal) return e == Empirical::LikelyAU;
    return false;
}

namespace {

void fill_empirical(ScanRecord& rec, const ExceptionReport& rep) {
    rec.empirical = empirical_verdict(rep);
    rec.sieve_limit = rep.limit;
    rec.exception_count = rep.exceptions.size();
    rec.top_window_count = rep.windows.empty() ? 0 : rep.windows[0].count;
    rec.largest_exception.reset();
    if (!rep.exceptions.empty()) rec.largest_exception = rep.exceptions.back();
    rec.top_window_off_class = 0;
    if (rec.exceptional_class && !rep.windows.empty()) {
        for (auto it = rep.exceptions.rbegin(); it != rep.exceptions.rend() && *it > rep.windows[0].lo; ++it) {
            if (!square_class_root(rec.params, *it, *rec.exceptional_class)) ++rec.top_window_off_class;
        }
    }
}

}  // namespace

ScanRecord scan_one(const FormParams& p, const ScanOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    ScanRecord rec;
    rec.params = p;
    Verdict v;
    try {
        v = classify(p.a, p.b, p.c, p.r, p.s, opt.mode);
        rec.cross_check = v.cross_check == CrossCheck::Agreed ? ScanCheck::Agreed : ScanCheck::Skipped;
    } catch (const CrossCheckMismatch& e) {
        rec.cross_check = ScanCheck::Mismatch;
        rec.mismatch_detail = e.what();
    }
    if (rec.cross_check != ScanCheck::Mismatch) {
        rec.verdict = v.kind;
        rec.reason = v.reason;
        rec.which = v.which;
        rec.conditions = v.conditions;
        rec.tau = v.tau;
        rec.exceptional_class = v.exceptional_class;
        const bool decided = v.kind == VerdictKind::AlmostUniversal || v.kind == VerdictKind::NotAlmostUniversal;
        if (decided && !opt.classify_only) {
            fill_empirical(rec, exceptions(p, opt.limit, SieveBackend::Serial));
            if (is_contradiction(rec.verdict, *rec.empirical) && opt.escalation_limit > opt.limit) {
                fill_empirical(rec, exceptions(p, opt.escalation_limit, SieveBackend::Serial));
            }
            rec.contradiction = is_contradiction(rec.verdict, *rec.empirical);
        }
    }
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

ScanSummary run_scan(const ScanOptions& opt) {
    const auto corpus = scan_corpus(opt.max_abc, opt.max_r, opt.max_s);
    ScanSummary out;
    out.records.resize(corpus.size());
    const int nt = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
    const auto n = static_cast<long>(corpus.size());
    // Records land at their corpus index, so the output order never depends on scheduling.
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
    for (long i = 0; i < n; ++i) out.records[static_cast<std::size_t>(i)] = scan_one(corpus[static_cast<std::size_t>(i)], opt);
    for (const auto& r : out.records) {
        if (r.cross_check == ScanCheck::Mismatch) ++out.mismatches;
        if (r.contradiction) ++out.contradictions;
    }
    return out;
}

namespace {

using ojson = nlohmann::ordered_json;

template <class T>
ojson opt_json(const std::optional<T>& x) {
    return x ? ojson(*x) : ojson(nullptr);
}

ojson record_json(const ScanRecord& rec, bool timing) {
    ojson j;
    j["a"] = rec.params.a;
    j["b"] = rec.params.b;
    j["c"] = rec.params.c;
    j["r"] = rec.params.r;
    j["s"] = rec.params.s;
    const bool ok = rec.cross_check != ScanCheck::Mismatch;
    j["verdict"] = ok ? ojson(to_string(rec.verdict)) : ojson(nullptr);
    j["reason"] = ok ? ojson(to_string(rec.reason)) : ojson(nullptr);
    j["case"] = ok ? ojson(to_string(rec.which)) : ojson(nullptr);
    for (const char* name : {"i", "ii", "iii", "iv"}) {
        if (!rec.conditions) {
            j[std::string("cond_") + name] = nullptr;
            continue;
        }
        const auto& k = *rec.conditions;
        const std::string s = name;
        j["cond_" + s] = s == "i" ? k.i : s == "ii" ? k.ii : s == "iii" ? k.iii : k.iv;
    }
    j["tau"] = opt_json(rec.tau);
    j["exceptional_class"] = opt_json(rec.exceptional_class);
    j["cross_check"] = to_string(rec.cross_check);
    j["mismatch_detail"] = rec.mismatch_detail;
    j["empirical"] = rec.empirical ? ojson(to_string(*rec.empirical)) : ojson(nullptr);
    j["sieve_limit"] = rec.sieve_limit;
    j["exception_count"] = rec.exception_count;
    j["top_window_count"] = rec.top_window_count;
    j["top_window_off_class"] = rec.top_window_off_class;
    j["largest_exception"] = opt_json(rec.largest_exception);
    j["contradiction"] = rec.contradiction;
    if (timing) j["elapsed_ms"] = rec.elapsed_ms;
    return j;
}

std::string csv_cell(const ojson& v) {
    if (v.is_null()) return "";
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char ch : s) {
            if (ch == '"') q += '"';
            q += ch;
        }
        return q + "\"";
    }
    return v.dump();
}

}  // namespace

std::string to_jsonl(const ScanRecord& rec, bool timing) { return record_json(rec, timing).dump(); }

std::string csv_header(bool timing) {
    std::string out;
    const auto j = record_json(ScanRecord{}, timing);
    for (const auto& [k, v] : j.items()) {
        (void)v;
        if (!out.empty()) out += ',';
        out += k;
    }
    return out;
}

std::string to_csv(const ScanRecord& rec, bool timing) {
    std::string out;
    bool first = true;
    const auto j = record_json(rec, timing);
    for (const auto& [k, v] : j.items()) {
        (void)k;
        if (!first) out += ',';
        first = false;
        out += csv_cell(v);
    }
    return out;
}

void write_records(std::ostream& os, const ScanSummary& summary, const std::string& format, bool timing) {
    if (format == "csv") {
        os << csv_header(timing) << '\n';
        for (const auto& r : summary.records) os << to_csv(r, timing) << '\n';
        return;
    }
    for (const auto& r : summary.records) os << to_jsonl(r, timing) << '\n';
}

}  // namespace pentaform
