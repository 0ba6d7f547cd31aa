#include "pentaform/classifier.hpp"

#include <algorithm>
#include <array>
#include <nlohmann/json.hpp>

#include "pentaform/local.hpp"

namespace pentaform {

namespace {

template <class E, std::size_t K>
std::optional<E> parse_enum(const std::string& s, const std::array<E, K>& all) {
    for (E e : all) {
        if (to_string(e) == s) return e;
    }
    return std::nullopt;
}

bool nu3_odd(const FormParams& p) { return padic_valuation(3, p.abc()) % 2 == 1; }

i64 mod8(i128 x) { return static_cast<i64>(((x % 8) + 8) % 8); }

bool coprime6(i64 x) { return x % 2 != 0 && x % 3 != 0; }

bool a1_alpha(const FormParams& p, i64 ab_target) {
    const i64 a = p.a, b = p.b, c = p.c;
    if (p.r != 1 || p.s < 4 || mod8(static_cast<i128>(a) * b) != ab_target) return false;
    const i64 w = mod8(static_cast<i128>(c) * (a + 2 * b));
    if (p.s == 4) return w == 1;
    return ab_target == 1 ? (w == 1 || w == 3) : (w == 1 || w == 7);
}

}  // namespace

i64 a2_beta_ab_residue(int r, A2Beta variant) {
    const bool even = r % 2 == 0;
    if (variant == A2Beta::Printed) return even ? 3 : 1;
    return even ? 1 : 3;
}

std::string to_string(TheoremCase c) {
    switch (c) {
        case TheoremCase::A: return "A";
        case TheoremCase::A1: return "A1";
        case TheoremCase::A2: return "A2";
        case TheoremCase::B: return "B";
        case TheoremCase::C: return "C";
        case TheoremCase::D: return "D";
        case TheoremCase::Uncovered: return "uncovered";
    }
    return "unknown";
}

std::string to_string(TauMode m) { return m == TauMode::Default ? "default" : "literal"; }

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::AlmostUniversal: return "almost_universal";
        case VerdictKind::NotAlmostUniversal: return "not_almost_universal";
        case VerdictKind::NotCovered: return "not_covered";
        case VerdictKind::InvalidParams: return "invalid_params";
    }
    return "unknown";
}

std::string to_string(Reason r) {
    switch (r) {
        case Reason::TheoremApplied: return "theorem_applied";
        case Reason::LocalObstruction: return "local_obstruction";
        case Reason::UncoveredRegime: return "uncovered_regime";
        case Reason::StarViolation: return "star_violation";
    }
    return "unknown";
}

std::string to_string(CrossCheck c) { return c == CrossCheck::Agreed ? "agreed" : "skipped"; }

std::optional<TheoremCase> theorem_case_from_string(const std::string& s) {
    using T = TheoremCase;
    return parse_enum(s, std::array{T::A, T::A1, T::A2, T::B, T::C, T::D, T::Uncovered});
}

std::optional<TauMode> tau_mode_from_string(const std::string& s) {
    return parse_enum(s, std::array{TauMode::Default, TauMode::Literal});
}

std::optional<VerdictKind> verdict_kind_from_string(const std::string& s) {
    using K = VerdictKind;
    return parse_enum(s, std::array{K::AlmostUniversal, K::NotAlmostUniversal, K::NotCovered, K::InvalidParams});
}

std::optional<Reason> reason_from_string(const std::string& s) {
    using R = Reason;
    return parse_enum(s, std::array{R::TheoremApplied, R::LocalObstruction, R::UncoveredRegime, R::StarViolation});
}

TheoremCase classify_case(const FormParams& p) {
    if (p.r > p.s) throw DomainError("classify_case: r > s");
    const bool odd3 = nu3_odd(p);
    if (p.r == 0) return p.s == 0 ? TheoremCase::D : TheoremCase::Uncovered;
    if (p.r == p.s) return odd3 ? TheoremCase::B : TheoremCase::C;
    if ((p.s - p.r) % 2 == 0) return TheoremCase::A;
    return odd3 ? TheoremCase::A2 : TheoremCase::A1;
}

i64 tau(const FormParams& params, TauMode mode) {
    const i64 sf = squarefree_abc(params);
    if (mode == TauMode::Literal || !nu3_odd(params)) return sf;
    return sf / 3;
}

bool condition_i(const FormParams& p, TheoremCase c) {
    const i64 a = p.a, b = p.b, cc = p.c;
    const int r = p.r, s = p.s;
    switch (c) {
        case TheoremCase::A:
            if (!nu3_odd(p)) return r >= 2 && a % 4 == b % 4 && b % 4 == cc % 4;
            return r % 2 == 0 && s % 2 == 0;
        case TheoremCase::A1: {
            if (a1_alpha(p, 1)) return true;
            const i64 ab = mod8(static_cast<i128>(a) * b);
            const i64 bc = mod8(static_cast<i128>(b) * cc);
            if (r <= 2 || (ab != 1 && ab != 3)) return false;
            if (s - r == 1 || s - r == 3) return bc == 1;
            return bc == 1 || bc == 3;
        }
        case TheoremCase::A2: {
            if (a1_alpha(p, 3)) return true;
            const i64 ab = mod8(static_cast<i128>(a) * b);
            const i64 bc = mod8(static_cast<i128>(b) * cc);
            // ab = +-1 (mod 8) for even r and +-3 for odd r. The sign pattern +-((-1)^r + 2) has the
            // parities the other way round and disagrees with both the 2-adic spinor norms and the sieve.
            const i64 t = a2_beta_ab_residue(r, A2Beta::Derived);
            if (r <= 2 || (ab != t && ab != mod8(-t))) return false;
            if (s - r <= 3) return bc == 3;
            return bc == 3 || bc == 5;
        }
        case TheoremCase::B: return r % 2 == 0 && b % 4 != cc % 4;
        case TheoremCase::C: return r >= 2 && a % 4 == b % 4 && b % 8 == cc % 8;
        default: throw DomainError("condition_i: no conditions for case " + to_string(c));
    }
}

bool condition_ii(const FormParams& p, TheoremCase c) {
    const bool odd3 = nu3_odd(p);
    for (auto [q, e] : abc_factorization(p)) {
        if (e % 2 == 0 || q == 3) continue;
        bool ok = false;
        switch (c) {
            case TheoremCase::A: ok = odd3 ? q % 3 == 1 : q % 4 == 1; break;
            case TheoremCase::A1: ok = legendre(-2, q) == 1; break;
            case TheoremCase::A2: ok = legendre(-6, q) == 1; break;
            case TheoremCase::B: ok = q % 3 == 1; break;
            case TheoremCase::C: ok = q % 4 == 1; break;
            default: throw DomainError("condition_ii: no conditions for case " + to_string(c));
        }
        if (!ok) return false;
    }
    return true;
}

bool condition_iii(const JordanSplitting& m3, TheoremCase c, bool odd3) {
    const bool even_shape = c == TheoremCase::A1 || c == TheoremCase::C || (c == TheoremCase::A && !odd3);
    if (c == TheoremCase::D || c == TheoremCase::Uncovered)
        throw DomainError("condition_iii: no conditions for case " + to_string(c));
    if (even_shape) {
        return std::all_of(m3.components.begin(), m3.components.end(),
                           [](const JordanComponent& k) { return k.scale_exp % 2 == 0; });
    }
    // <u1, 3^i u2, 3^j u3> with 0 < i < j.
    const auto& k = m3.components;
    if (k.size() != 3 || k[0].scale_exp != 0) return false;
    for (const auto& comp : k) {
        if (comp.rank != 1) return false;
    }
    const int i = k[1].scale_exp, j = k[2].scale_exp;
    const int u1 = *k[0].unit_class, u2 = *k[1].unit_class, u3 = *k[2].unit_class;
    if (c == TheoremCase::A2) return u1 * u2 == (i % 2 == 0 ? 1 : -1) && u1 * u3 == (j % 2 == 0 ? 1 : -1);
    return u1 == u2 && u2 == u3;
}

bool condition_iii(const FormParams& params, TheoremCase c) {
    return condition_iii(jordan_odd(3, gram_M(params)), c, nu3_odd(params));
}

std::optional<TauSolution> solve_tau_equation(const FormParams& params, i64 target) {
    const auto coef = params.coefficients();
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int x, int y) { return coef[x] > coef[y]; });
    const i128 c0 = coef[order[0]], c1 = coef[order[1]], c2 = coef[order[2]];
    const i128 t = target;
    for (i64 x = 1; c0 * x * x + c1 + c2 <= t; ++x) {
        if (!coprime6(x)) continue;
        const i128 rest = t - c0 * x * x;
        for (i64 y = 1; c1 * y * y + c2 <= rest; ++y) {
            if (!coprime6(y)) continue;
            const i128 last = rest - c1 * y * y;
            if (last % c2 != 0 || !is_square(last / c2)) continue;
            const i64 z = isqrt(last / c2);
            if (!coprime6(z)) continue;
            std::array<i64, 3> sol{};
            sol[order[0]] = x;
            sol[order[1]] = y;
            sol[order[2]] = z;
            return TauSolution{sol[0], sol[1], sol[2]};
        }
    }
    return std::nullopt;
}

bool condition_iv(const FormParams& params, TauMode mode) {
    const i64 t = tau(params, mode);
    if (((t - params.eps) % 24 + 24) % 24 != 0) return false;
    return !solve_tau_equation(params, t).has_value();
}

Verdict classify(i64 a, i64 b, i64 c, int r, int s, TauMode mode) {
    Verdict v;
    if (r > s) {
        std::swap(b, c);
        std::swap(r, s);
    }
    if (auto bad = structural_violation(a, b, c, r, s)) {
        v.violation = bad;
        return v;
    }
    if (r == 0 && s > 0) {
        // eps = a + b + 2^s c is always even here, so (*) cannot hold either.
        v.kind = VerdictKind::NotCovered;
        v.reason = Reason::UncoveredRegime;
        return v;
    }
    FormParams p;
    try {
        p = make_params(a, b, c, r, s);
    } catch (const ParamError& e) {
        v.violation = e.kind();
        return v;
    }
    v.params = p;
    v.tau = tau(p, mode);

    const auto local = no_local_obstruction(p);
    if (local.obstructed()) {
        v.kind = VerdictKind::NotAlmostUniversal;
        v.reason = Reason::LocalObstruction;
        v.obstructed_primes = local.obstructed_primes;
        v.which = classify_case(p);
        return v;
    }

    v.which = classify_case(p);
    v.reason = Reason::TheoremApplied;
    bool spinor_part = false;
    if (v.which == TheoremCase::D) {
        v.kind = VerdictKind::AlmostUniversal;
    } else {
        Conditions k;
        k.i = condition_i(p, v.which);
        k.ii = condition_ii(p, v.which);
        k.iii = condition_iii(p, v.which);
        k.iv = condition_iv(p, mode);
        v.conditions = k;
        spinor_part = k.spinor_part();
        if (k.all()) {
            v.kind = VerdictKind::NotAlmostUniversal;
            v.exceptional_class = v.tau;
        } else {
            v.kind = VerdictKind::AlmostUniversal;
        }
    }

    const auto spin = spinor_exception_check(p);
    if (spin.outcome != SpinorOutcome::Unsupported) {
        if ((spin.outcome == SpinorOutcome::IsException) != spinor_part) {
            throw CrossCheckMismatch("classifier/spinor mismatch at " + to_string(p) + ": case " +
                                     to_string(v.which) + " conditions (i)-(iii) " +
                                     (spinor_part ? "hold" : "fail") + ", spinor check says " +
                                     to_string(spin.outcome) + " (2: " + to_string(spin.at2.status) +
                                     ", 3: " + to_string(spin.at3.status) + ")");
        }
        v.cross_check = CrossCheck::Agreed;
    }
    return v;
}

std::string to_json(const Verdict& v) {
    nlohmann::ordered_json j;
    if (v.params) {
        j["params"] = {{"a", v.params->a}, {"b", v.params->b}, {"c", v.params->c},
                       {"r", v.params->r}, {"s", v.params->s}};
    } else {
        j["params"] = nullptr;
    }
    j["case"] = to_string(v.which);
    if (v.conditions) {
        j["conditions"] = {{"i", v.conditions->i}, {"ii", v.conditions->ii},
                           {"iii", v.conditions->iii}, {"iv", v.conditions->iv}};
    } else {
        j["conditions"] = nullptr;
    }
    j["tau"] = v.tau ? nlohmann::ordered_json(*v.tau) : nlohmann::ordered_json(nullptr);
    j["verdict"] = to_string(v.kind);
    j["reason"] = to_string(v.reason);
    j["exceptional_class"] =
        v.exceptional_class ? nlohmann::ordered_json(*v.exceptional_class) : nlohmann::ordered_json(nullptr);
    j["obstructed_primes"] = v.obstructed_primes;
    j["violation"] = v.violation ? nlohmann::ordered_json(to_string(*v.violation)) : nlohmann::ordered_json(nullptr);
    j["cross_check"] = to_string(v.cross_check);
    return j.dump();
}

}  // namespace pentaform
