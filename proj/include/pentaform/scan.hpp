#pragma once

// Corpus scan: classify every valid tuple in a box and compare against the sieve.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pentaform/classifier.hpp"
#include "pentaform/oracle.hpp"

namespace pentaform {

struct ScanOptions {
    i64 max_abc = 15;
    int max_r = 6;
    int max_s = 6;
    i64 limit = 200'000;
    i64 escalation_limit = 1'000'000;
    int jobs = 0;  ///< <= 0: OpenMP default
    TauMode mode = TauMode::Default;
    bool timing = false;
    /// Skip the sieve entirely (classifier and spinor only).
    bool classify_only = false;
};

enum class ScanCheck { Agreed, Skipped, Mismatch };

std::string to_string(ScanCheck c);

struct ScanRecord {
    FormParams params;
    VerdictKind verdict = VerdictKind::InvalidParams;
    Reason reason = Reason::TheoremApplied;
    TheoremCase which = TheoremCase::Uncovered;
    std::optional<Conditions> conditions;
    std::optional<i64> tau;
    std::optional<i64> exceptional_class;
    ScanCheck cross_check = ScanCheck::Skipped;
    std::string mismatch_detail;
    std::optional<Empirical> empirical;
    /// N at which the empirical verdict was taken (limit or escalation_limit).
    i64 sieve_limit = 0;
    std::size_t exception_count = 0;
    std::size_t top_window_count = 0;
    /// Top-window exceptions n with 24n + eps not in tau * squares.
    std::size_t top_window_off_class = 0;
    std::optional<i64> largest_exception;
    bool contradiction = false;
    double elapsed_ms = 0.0;
};

struct ScanSummary {
    std::vector<ScanRecord> records;
    std::size_t mismatches = 0;
    std::size_t contradictions = 0;
};

/// Tuples with odd a, b, c <= max_abc, r <= min(s, max_r), s <= max_s satisfying (*),
/// in lexicographic order of (a, b, c, r, s).
std::vector<FormParams> scan_corpus(i64 max_abc, int max_r, int max_s);

/// Classifier vs empirical disagreement for a single tuple.
bool is_contradiction(VerdictKind v, Empirical e);

ScanRecord scan_one(const FormParams& p, const ScanOptions& opt);

ScanSummary run_scan(const ScanOptions& opt);

std::string to_jsonl(const ScanRecord& rec, bool timing);
std::string csv_header(bool timing);
std::string to_csv(const ScanRecord& rec, bool timing);

void write_records(std::ostream& os, const ScanSummary& summary, const std::string& format, bool timing);

}  // namespace pentaform
