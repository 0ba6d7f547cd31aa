#pragma once

// Local obstructions away from 2 and 3.

#include <array>
#include <vector>

#include "pentaform/lattice.hpp"

namespace pentaform {

struct LocalReport {
    /// Primes p >= 5 dividing abc at which M_p is not <1, -1, -dM>.
    std::vector<i64> obstructed_primes;
    /// abc has no prime factor >= 5, so nothing needed testing.
    bool vacuous = false;

    bool obstructed() const { return !obstructed_primes.empty(); }
};

/// For p not dividing 6, M_p = L_p = <a, 2^r b, 2^s c>.
std::array<i128, 3> local_lattice_away_from_6(const FormParams& params, i64 p);

/// Odd-p classification: same scales, ranks and component discriminant classes.
bool is_isometric_odd(const JordanSplitting& lhs, const JordanSplitting& rhs);

/// Jordan splitting of <1, -1, -dM> at the odd prime p.
JordanSplitting hyperbolic_reference(const FormParams& params, i64 p);

LocalReport no_local_obstruction(const FormParams& params);

}  // namespace pentaform
