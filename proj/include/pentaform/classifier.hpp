#pragma once

// Decision procedure for almost universality of
//   a P5(x) + 2^r b P5(y) + 2^s c P5(z).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pentaform/lattice.hpp"
#include "pentaform/spinor.hpp"

namespace pentaform {

enum class TheoremCase { A, A1, A2, B, C, D, Uncovered };
enum class TauMode { Default, Literal };
enum class VerdictKind { AlmostUniversal, NotAlmostUniversal, NotCovered, InvalidParams };
enum class Reason { TheoremApplied, LocalObstruction, UncoveredRegime, StarViolation };
enum class CrossCheck { Agreed, Skipped };

std::string to_string(TheoremCase c);
std::string to_string(TauMode m);
std::string to_string(VerdictKind k);
std::string to_string(Reason r);
std::string to_string(CrossCheck c);

/// Inverses of to_string; nullopt on unknown names.
std::optional<TheoremCase> theorem_case_from_string(const std::string& s);
std::optional<TauMode> tau_mode_from_string(const std::string& s);
std::optional<VerdictKind> verdict_kind_from_string(const std::string& s);
std::optional<Reason> reason_from_string(const std::string& s);

/// Classifier and spinor module disagree: an implementation bug, never swallowed.
class CrossCheckMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct Conditions {
    bool i = false;
    bool ii = false;
    bool iii = false;
    bool iv = false;

    bool spinor_part() const { return i && ii && iii; }
    bool all() const { return i && ii && iii && iv; }
};

struct Verdict {
    VerdictKind kind = VerdictKind::InvalidParams;
    Reason reason = Reason::StarViolation;
    TheoremCase which = TheoremCase::Uncovered;
    /// Normalized parameters (absent for InvalidParams).
    std::optional<FormParams> params;
    /// Evaluated for A, A1, A2, B, C.
    std::optional<Conditions> conditions;
    /// Present iff NotAlmostUniversal through a theorem.
    std::optional<i64> exceptional_class;
    /// tau for the active mode, whenever params are valid.
    std::optional<i64> tau;
    std::optional<ParamViolation> violation;
    std::vector<i64> obstructed_primes;
    CrossCheck cross_check = CrossCheck::Skipped;
};

/// Case from (r, s) and the parity of v_3(abc); requires r <= s.
TheoremCase classify_case(const FormParams& params);

i64 tau(const FormParams& params, TauMode mode = TauMode::Default);

bool condition_i(const FormParams& params, TheoremCase c);

/// Residue t with ab = +-t (mod 8) in the r > 2 branch of case A2 (i). Printed is the
/// congruence +-((-1)^r + 2) taken at face value; Derived is what condition_i uses.
enum class A2Beta { Printed, Derived };
i64 a2_beta_ab_residue(int r, A2Beta variant);

bool condition_ii(const FormParams& params, TheoremCase c);
/// nu3_odd selects the branch of case A; ignored for the other cases.
bool condition_iii(const JordanSplitting& m3, TheoremCase c, bool nu3_odd);
bool condition_iii(const FormParams& params, TheoremCase c);

/// Positive (u, v, w) coprime to 6 with a u^2 + 2^r b v^2 + 2^s c w^2 = target.
struct TauSolution {
    i64 u = 1;
    i64 v = 1;
    i64 w = 1;
};
std::optional<TauSolution> solve_tau_equation(const FormParams& params, i64 target);

bool condition_iv(const FormParams& params, TauMode mode = TauMode::Default);

/// Full pipeline; throws CrossCheckMismatch on a classifier/spinor disagreement.
Verdict classify(i64 a, i64 b, i64 c, int r, int s, TauMode mode = TauMode::Default);

/// One-line JSON object: params, case, conditions, tau, verdict, reason.
std::string to_json(const Verdict& v);

}  // namespace pentaform
