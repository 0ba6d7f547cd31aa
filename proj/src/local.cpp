#include "pentaform/local.hpp"

#include <set>

namespace pentaform {

std::array<i128, 3> local_lattice_away_from_6(const FormParams& params, i64 p) {
    if (p == 2 || p == 3) throw DomainError("local_lattice_away_from_6: p must not divide 6");
    if (!is_prime(p)) throw DomainError("local_lattice_away_from_6: p must be prime");
    const auto coef = params.coefficients();
    return {coef[0], coef[1], coef[2]};
}

bool is_isometric_odd(const JordanSplitting& lhs, const JordanSplitting& rhs) {
    if (lhs.p != rhs.p || lhs.components.size() != rhs.components.size()) return false;
    for (std::size_t i = 0; i < lhs.components.size(); ++i) {
        const auto& x = lhs.components[i];
        const auto& y = rhs.components[i];
        if (x.scale_exp != y.scale_exp || x.rank != y.rank || x.disc_class != y.disc_class) return false;
    }
    return true;
}

JordanSplitting hyperbolic_reference(const FormParams& params, i64 p) {
    // -dM overflows 128 bits for large exponents; only its p-part and unit class matter.
    const int v = params.dM_valuation(p);
    const int unit = legendre(-static_cast<i128>(params.dM_unit_residue(p)), p);
    return jordan_from_pieces(p, {{0, 1}, {0, legendre(-1, p)}, {v, unit}});
}

LocalReport no_local_obstruction(const FormParams& params) {
    std::set<i64> primes;
    for (i64 q : {params.a, params.b, params.c}) {
        for (auto [p, e] : factorize(q)) {
            if (p >= 5) primes.insert(p);
        }
    }
    LocalReport report;
    report.vacuous = primes.empty();
    for (i64 p : primes) {
        const auto diag = local_lattice_away_from_6(params, p);
        const auto here = jordan_odd(p, GramMatrix::diagonal(diag[0], diag[1], diag[2]));
        if (!is_isometric_odd(here, hyperbolic_reference(params, p))) report.obstructed_primes.push_back(p);
    }
    return report;
}

}  // namespace pentaform
