#pragma once

// The finite group Q_p^x / Q_p^x2 for a fixed prime p, and subsets of it.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pentaform/numth.hpp"

namespace pentaform {

/// Number of square classes of Q_p^x: 8 at p = 2, 4 at odd p.
int square_class_count(i64 p);

/// A coset x * Q_p^x2.
///
/// At p = 2 the unit tag is the unit part modulo 8 (1, 3, 5 or 7). At odd p it is the
/// Legendre symbol of the unit part (+1 or -1).
class SquareClass {
public:
    static SquareClass of(i64 p, i128 x);
    static SquareClass of(i64 p, Rational x);
    static SquareClass from_index(i64 p, int index);

    i64 prime() const { return p_; }
    int val_parity() const { return parity_; }
    int unit_tag() const { return unit_; }

    /// Dense index in [0, square_class_count(p)).
    int index() const;

    /// Small signed integer in this class: {1,5,-1,-5,2,10,-2,-10} at p = 2,
    /// {1, n, p, pn} at odd p with n a fixed nonresidue (-1 when p = 3 mod 4).
    i64 representative() const;

    bool is_identity() const { return index() == 0; }

    SquareClass operator*(const SquareClass& other) const;
    bool operator==(const SquareClass&) const = default;

private:
    SquareClass(i64 p, int parity, int unit) : p_(p), parity_(parity), unit_(unit) {}

    i64 p_;
    int parity_;
    int unit_;
};

/// A subset of Q_p^x / Q_p^x2 stored as a membership mask.
class SquareClassSet {
public:
    explicit SquareClassSet(i64 p) : p_(p) {}

    static SquareClassSet full(i64 p);
    static SquareClassSet identity(i64 p);
    /// Classes of the given nonzero integers.
    static SquareClassSet of(i64 p, std::initializer_list<i64> members);

    i64 prime() const { return p_; }
    std::uint8_t mask() const { return mask_; }

    void insert(const SquareClass& c);
    bool contains(const SquareClass& c) const;
    bool contains(i128 x) const { return contains(SquareClass::of(p_, x)); }
    int size() const;
    bool empty() const { return mask_ == 0; }
    bool is_full() const;
    bool is_subset_of(const SquareClassSet& other) const;
    /// Contains the identity and is closed under multiplication.
    bool is_subgroup() const;

    std::vector<SquareClass> elements() const;

    /// {x * y : y in this}.
    SquareClassSet translate(const SquareClass& x) const;

    /// Sorted representatives, e.g. "{1, 5, 2, 10}".
    std::string to_string() const;

    bool operator==(const SquareClassSet&) const = default;

private:
    i64 p_;
    std::uint8_t mask_ = 0;
};

/// Smallest multiplicatively closed set containing the identity and all generators.
SquareClassSet subgroup_generate(i64 p, std::span<const SquareClass> gens);
SquareClassSet subgroup_generate(const SquareClassSet& gens);

/// Classes of N(Q_p(sqrt(-D))^x), obtained by enumerating the norm form x^2 + D y^2.
SquareClassSet norm_group(i64 p, i64 D);

/// {gamma : (gamma, beta)_p = 1}.
SquareClassSet hilbert_kernel(i64 p, i128 beta);

}  // namespace pentaform
