#pragma once

// Spinor-norm containments theta(O+(M_p)) in N(Q_p(sqrt(-D))) at p = 2, 3 and p >= 5,
// evaluated from the explicit local spinor-norm tables. Used as an independent check on
// the classifier's congruence conditions (i)-(iii).

#include <optional>
#include <string>
#include <vector>

#include "pentaform/lattice.hpp"
#include "pentaform/squareclass.hpp"

namespace pentaform {

enum class Containment { Contained, NotContained, Unsupported };

std::string to_string(Containment c);

struct ContainmentVerdict {
    Containment status = Containment::Unsupported;
    /// theta(O+(M_p)) when the tables determine it exactly.
    std::optional<SquareClassSet> computed_group;
    /// The group theta(O+(M_p)) has to sit in.
    std::optional<SquareClassSet> target;
    std::string route;
};

/// theta(O+(<1, 2^m w>)) over Z_2 for odd w; only w mod 8 matters. nullopt when m == 0.
std::optional<SquareClassSet> theta_binary_2adic(int m, i128 w);

/// D in {1, 2, 3, 6} with Q(sqrt(-t dM)) = Q(sqrt(-D)) for every primitive spinor
/// exception t coprime to 6: 2 | D iff r + s odd, 3 | D iff v_3(abc) odd.
int exceptional_field(const FormParams& params);

ContainmentVerdict theta_M2_contained(const FormParams& params, int D);

/// theta(O+(L)) for an odd-p lattice with the given splitting: generated by products of
/// norms of two distinct basis vectors of a diagonalization.
SquareClassSet theta_odd_group(const JordanSplitting& j);

ContainmentVerdict theta_M3_contained(const JordanSplitting& j, int D);

enum class SpinorOutcome { IsException, NotException, Unsupported };

std::string to_string(SpinorOutcome o);

struct SpinorReport {
    SpinorOutcome outcome = SpinorOutcome::Unsupported;
    int D = 1;
    /// Primes p >= 5 of sf(abc) with -D a nonresidue.
    std::vector<i64> failing_primes;
    ContainmentVerdict at2;
    ContainmentVerdict at3;
};

/// Requires no local obstruction (throws std::invalid_argument otherwise).
SpinorReport spinor_exception_check(const FormParams& params);

}  // namespace pentaform
