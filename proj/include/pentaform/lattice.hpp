#pragma once

// The shifted lattice M = Z v + 6 L attached to
//   F(x, y, z) = a P5(x) + 2^r b P5(y) + 2^s c P5(z),
// with L = <a, 2^r b, 2^s c> and v = -(e1 + e2 + e3).

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pentaform/numth.hpp"

namespace pentaform {

inline constexpr i64 kMaxCoefficient = 1'000'000;
inline constexpr int kMaxExponent = 40;

enum class ParamViolation {
    NonPositiveCoefficient,
    EvenCoefficient,
    NegativeExponent,
    OutOfRange,
    GcdViolation,
    EpsilonDivisibleBy2Or3,
};

std::string to_string(ParamViolation v);

class ParamError : public std::invalid_argument {
public:
    explicit ParamError(ParamViolation kind);
    ParamViolation kind() const { return kind_; }

private:
    ParamViolation kind_;
};

/// (a, b, c, r, s) satisfying gcd(a,b,c) = 1, 0 <= r <= s, gcd(6, eps) = 1, a,b,c odd.
struct FormParams {
    i64 a = 1;
    i64 b = 1;
    i64 c = 1;
    int r = 0;
    int s = 0;
    /// a + 2^r b + 2^s c
    i64 eps = 3;

    /// The three coefficients a, 2^r b, 2^s c.
    std::array<i64, 3> coefficients() const;
    i128 abc() const { return static_cast<i128>(a) * b * c; }

    /// dM = 6^4 2^(r+s) abc, when it fits in 128 bits.
    std::optional<i128> dM_exact() const;
    int dM_valuation(i64 p) const;
    /// dM / p^v_p(dM) reduced modulo the odd prime p.
    i64 dM_unit_residue(i64 p) const;

    bool operator==(const FormParams&) const = default;
};

std::string to_string(const FormParams& params);

/// Factorization of abc assembled from the factorizations of a, b and c.
std::vector<std::pair<i64, int>> abc_factorization(const FormParams& params);
/// sf(abc); fits in 64 bits because abc <= 10^18.
i64 squarefree_abc(const FormParams& params);

/// Every rule of condition (*) except gcd(6, eps) = 1. Assumes r <= s after ordering.
std::optional<ParamViolation> structural_violation(i64 a, i64 b, i64 c, int r, int s);

/// Validates and normalizes; if r > s the scaled terms (b, r) and (c, s) are swapped.
/// Throws ParamError.
FormParams make_params(i64 a, i64 b, i64 c, int r, int s);

/// Symmetric 3x3 integer matrix.
class GramMatrix {
public:
    GramMatrix() = default;
    explicit GramMatrix(const std::array<std::array<i128, 3>, 3>& entries);
    static GramMatrix diagonal(i128 d0, i128 d1, i128 d2);

    i128 operator()(int i, int j) const { return m_[i][j]; }
    bool operator==(const GramMatrix&) const = default;

    /// U * G * U^T; U should be unimodular for an isometric basis change.
    GramMatrix transformed(const std::array<std::array<i64, 3>, 3>& u) const;

    /// Exact determinant, or nullopt on 128-bit overflow.
    std::optional<i128> determinant() const;

private:
    std::array<std::array<i128, 3>, 3> m_{};
};

/// Gram matrix of M in the basis {6 e1, 6 e2, v}.
GramMatrix gram_M(const FormParams& params);

struct JordanComponent {
    int scale_exp = 0;
    int rank = 1;
    /// Legendre class of the component determinant divided by p^(scale*rank).
    int disc_class = 1;
    /// Legendre class of the unit, rank-1 components only.
    std::optional<int> unit_class;

    bool operator==(const JordanComponent&) const = default;
};

/// Odd-p Jordan invariants: ascending scales, ranks and unit classes.
struct JordanSplitting {
    i64 p = 3;
    std::vector<JordanComponent> components;

    int total_rank() const;
    /// Sum of scale * rank = v_p(det).
    int weighted_scale_sum() const;
    std::vector<int> scales_with_multiplicity() const;
    std::string to_string() const;

    bool operator==(const JordanSplitting&) const = default;
};

/// A rank-1 piece p^scale * u with u a unit of Legendre class unit_class.
struct JordanPiece {
    int scale_exp = 0;
    int unit_class = 1;
};

/// Merges rank-1 pieces of equal scale into components.
JordanSplitting jordan_from_pieces(i64 p, std::vector<JordanPiece> pieces);

/// Jordan splitting of the Z_p-lattice with Gram matrix g, p odd. Throws on singular g.
JordanSplitting jordan_odd(i64 p, const GramMatrix& g);

/// 2-adic diagonalization <eps, 2^(r+2) eps b (a + 2^s c), 2^(s+2) a c (a + 2^s c)>, r >= 1.
std::array<i128, 3> m2_diagonal(const FormParams& params);

enum class EvenBinary {
    A,  ///< (2 1; 1 2)
    H,  ///< (0 1; 1 0)
};

std::string to_string(EvenBinary b);

/// For r = s = 0: M_2 = <eps> + 4 eps * K with K the returned even unimodular plane.
/// The coefficients are permuted so that b = c (mod 4) before testing.
EvenBinary m2_r0(const FormParams& params);

enum class BinaryValueSet {
    AllOf2Z2,            ///< 2 Z_2
    ZeroOrOddValuation,  ///< {0} and every x with v_2(x) odd
};

/// Values of (rho 1; 1 rho) over Z_2 for rho in {0, 2}.
BinaryValueSet binary_even_values(int rho);
bool contains(BinaryValueSet set, i128 x);

}  // namespace pentaform
