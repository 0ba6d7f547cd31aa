// pentaform: almost-universality of a P5(x) + 2^r b P5(y) + 2^s c P5(z).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "pentaform/classifier.hpp"
#include "pentaform/oracle.hpp"
#include "pentaform/scan.hpp"

using namespace pentaform;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit {
    kOk = 0,
    kUsage = 1,
    kStar = 2,
    kNoWitness = 3,
    kResourceCap = 4,
    kMismatch = 5,
    kContradiction = 6,
};

struct FormFlags {
    i64 a = 0, b = 0, c = 0;
    int r = 0, s = 0;
};

void add_form_flags(CLI::App* cmd, FormFlags& f) {
    cmd->add_option("--a", f.a, "coefficient a (odd, positive)")->required();
    cmd->add_option("--b", f.b, "coefficient b (odd, positive)")->required();
    cmd->add_option("--c", f.c, "coefficient c (odd, positive)")->required();
    cmd->add_option("--r", f.r, "exponent r")->required();
    cmd->add_option("--s", f.s, "exponent s")->required();
}

int star_failure(const std::string& violation) {
    std::cout << ojson{{"verdict", "invalid_params"}, {"reason", "star_violation"}, {"violation", violation}}.dump()
              << '\n';
    return kStar;
}

int cmd_classify(const FormFlags& f, bool literal, bool json) {
    const Verdict v = classify(f.a, f.b, f.c, f.r, f.s, literal ? TauMode::Literal : TauMode::Default);
    if (json) {
        std::cout << to_json(v) << '\n';
    } else {
        std::cout << "verdict=" << to_string(v.kind) << " case=" << to_string(v.which)
                  << " reason=" << to_string(v.reason);
        if (v.tau) std::cout << " tau=" << *v.tau;
        if (v.conditions) {
            std::cout << " conditions=" << v.conditions->i << v.conditions->ii << v.conditions->iii
                      << v.conditions->iv;
        }
        if (v.violation) std::cout << " violation=" << to_string(*v.violation);
        for (i64 p : v.obstructed_primes) std::cout << " obstructed_at=" << p;
        std::cout << " cross_check=" << to_string(v.cross_check) << '\n';
    }
    return v.kind == VerdictKind::InvalidParams ? kStar : kOk;
}

int cmd_check(const FormParams& p, i64 n) {
    const auto w = is_representable(p, n);
    if (!w) {
        std::cout << ojson{{"n", n}, {"witness", nullptr}}.dump() << '\n';
        return kNoWitness;
    }
    std::cout << ojson{{"n", n},
                       {"x", w->x},
                       {"y", w->y},
                       {"z", w->z},
                       {"u", 6 * w->x - 1},
                       {"v", 6 * w->y - 1},
                       {"w", 6 * w->z - 1}}
                     .dump()
              << '\n';
    return kOk;
}

int cmd_exceptions(const FormParams& p, i64 limit, const std::string& out, bool literal) {
    const auto rep = exceptions(p, limit);
    const i64 t = tau(p, literal ? TauMode::Literal : TauMode::Default);
    std::ofstream file;
    if (!out.empty()) {
        file.open(out);
        if (!file) {
            std::cerr << "cannot open " << out << '\n';
            return kUsage;
        }
    }
    std::ostream& lines = out.empty() ? std::cout : file;
    for (i64 n : rep.exceptions) {
        ojson j{{"n", n}, {"l_n", static_cast<i64>(shifted_value(p, n))}};
        const auto k = square_class_root(p, n, t);
        j["square_class_k"] = k ? ojson(*k) : ojson(nullptr);
        lines << j.dump() << '\n';
    }
    ojson windows = ojson::array();
    for (const auto& w : rep.windows) windows.push_back({{"lo", w.lo}, {"hi", w.hi}, {"count", w.count}});
    ojson summary{{"limit", rep.limit},
                  {"tau", t},
                  {"exception_count", rep.exceptions.size()},
                  {"windows", windows},
                  {"empirical_heuristic", to_string(empirical_verdict(rep))}};
    (out.empty() ? std::cerr : std::cout) << summary.dump() << '\n';
    return kOk;
}

int cmd_scan(const ScanOptions& opt, const std::string& out, const std::string& format) {
    const auto summary = run_scan(opt);
    if (out.empty()) {
        write_records(std::cout, summary, format, opt.timing);
    } else {
        std::ofstream file(out);
        if (!file) {
            std::cerr << "cannot open " << out << '\n';
            return kUsage;
        }
        write_records(file, summary, format, opt.timing);
    }
    std::cerr << ojson{{"records", summary.records.size()},
                       {"mismatches", summary.mismatches},
                       {"contradictions", summary.contradictions}}
                     .dump()
              << '\n';
    if (summary.mismatches > 0) return kMismatch;
    if (summary.contradictions > 0) return kContradiction;
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Almost universality of a P5(x) + 2^r b P5(y) + 2^s c P5(z)"};
    app.require_subcommand(1);

    FormFlags form;
    bool literal = false;
    bool json = false;
    auto* classify_cmd = app.add_subcommand("classify", "Decide almost universality");
    add_form_flags(classify_cmd, form);
    classify_cmd->add_flag("--literal-sf", literal, "use sf(abc) as the exceptional class in every case");
    classify_cmd->add_flag("--json", json, "print a JSON object");

    i64 n = 0;
    auto* check_cmd = app.add_subcommand("check", "Search for a representation of n");
    add_form_flags(check_cmd, form);
    check_cmd->add_option("--n", n, "target integer")->required();

    i64 limit = 0;
    std::string out;
    auto* exc_cmd = app.add_subcommand("exceptions", "List non-represented n up to a limit");
    add_form_flags(exc_cmd, form);
    exc_cmd->add_option("--limit", limit, "sieve bound N")->required();
    exc_cmd->add_option("--out", out, "JSONL file for exception lines (default stdout)");
    exc_cmd->add_flag("--literal-sf", literal, "use sf(abc) for square_class_k");

    ScanOptions opt;
    std::string format = "jsonl";
    auto* scan_cmd = app.add_subcommand("scan", "Classify a box of tuples and compare with the sieve");
    scan_cmd->add_option("--max-abc", opt.max_abc, "largest odd coefficient")->capture_default_str();
    scan_cmd->add_option("--max-r", opt.max_r, "largest r")->capture_default_str();
    scan_cmd->add_option("--max-s", opt.max_s, "largest s")->capture_default_str();
    scan_cmd->add_option("--limit", opt.limit, "sieve bound N")->capture_default_str();
    scan_cmd->add_option("--escalate", opt.escalation_limit, "bound for re-checking contradictions")
        ->capture_default_str();
    scan_cmd->add_option("--jobs", opt.jobs, "worker threads (0: default)")->capture_default_str();
    scan_cmd->add_option("--out", out, "output file (default stdout)");
    scan_cmd->add_option("--format", format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
    scan_cmd->add_flag("--literal-sf", literal, "use sf(abc) as the exceptional class in every case");
    scan_cmd->add_flag("--timing", opt.timing, "add elapsed_ms to each record");
    scan_cmd->add_flag("--classify-only", opt.classify_only, "skip the sieve");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*classify_cmd) return cmd_classify(form, literal, json);
        if (*scan_cmd) {
            opt.mode = literal ? TauMode::Literal : TauMode::Default;
            return cmd_scan(opt, out, format);
        }
        FormParams p;
        try {
            p = make_params(form.a, form.b, form.c, form.r, form.s);
        } catch (const ParamError& e) {
            return star_failure(to_string(e.kind()));
        }
        if (*check_cmd) return cmd_check(p, n);
        return cmd_exceptions(p, limit, out, literal);
    } catch (const CrossCheckMismatch& e) {
        std::cerr << "internal cross-check mismatch: " << e.what() << '\n';
        return kMismatch;
    } catch (const ResourceCapExceeded& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return kResourceCap;
    } catch (const RangeError& e) {
        std::cerr << "out of range: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
