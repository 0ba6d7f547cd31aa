#include "pentaform/squareclass.hpp"

#include <algorithm>
#include <sstream>

namespace pentaform {

namespace {

void require_prime(i64 p) {
    if (!is_prime(p)) throw DomainError("square classes need a prime p");
}

i64 fixed_nonresidue(i64 p) {
    if (p % 4 == 3) return -1;
    for (i64 n = 2;; ++n) {
        if (legendre(n, p) == -1) return n;
    }
}

}  // namespace

int square_class_count(i64 p) { return p == 2 ? 8 : 4; }

SquareClass SquareClass::of(i64 p, i128 x) {
    require_prime(p);
    if (x == 0) throw DomainError("square class of zero");
    const int parity = padic_valuation(p, x) % 2;
    const i128 unit = strip_prime(p, x);
    if (p == 2) return SquareClass(p, parity, static_cast<int>(Residue::of(unit, 8).value));
    return SquareClass(p, parity, legendre(unit, p));
}

SquareClass SquareClass::of(i64 p, Rational x) {
    return of(p, static_cast<i128>(x.num) * x.den);
}

SquareClass SquareClass::from_index(i64 p, int index) {
    require_prime(p);
    if (index < 0 || index >= square_class_count(p)) throw DomainError("square class index out of range");
    if (p == 2) return SquareClass(p, index / 4, 2 * (index % 4) + 1);
    return SquareClass(p, index / 2, (index % 2 == 0) ? 1 : -1);
}

int SquareClass::index() const {
    if (p_ == 2) return 4 * parity_ + (unit_ - 1) / 2;
    return 2 * parity_ + (unit_ == 1 ? 0 : 1);
}

i64 SquareClass::representative() const {
    i64 unit = 0;
    if (p_ == 2) {
        static constexpr i64 kUnits[] = {1, -5, 5, -1};  // 1, 3, 5, 7 mod 8
        unit = kUnits[(unit_ - 1) / 2];
        return parity_ ? 2 * unit : unit;
    }
    unit = (unit_ == 1) ? 1 : fixed_nonresidue(p_);
    return parity_ ? p_ * unit : unit;
}

SquareClass SquareClass::operator*(const SquareClass& other) const {
    if (p_ != other.p_) throw DomainError("square classes at different primes");
    if (p_ == 2) return SquareClass(p_, parity_ ^ other.parity_, (unit_ * other.unit_) % 8);
    return SquareClass(p_, parity_ ^ other.parity_, unit_ * other.unit_);
}

SquareClassSet SquareClassSet::full(i64 p) {
    SquareClassSet s(p);
    s.mask_ = static_cast<std::uint8_t>((1u << square_class_count(p)) - 1);
    return s;
}

SquareClassSet SquareClassSet::identity(i64 p) {
    SquareClassSet s(p);
    s.mask_ = 1;
    return s;
}

SquareClassSet SquareClassSet::of(i64 p, std::initializer_list<i64> members) {
    SquareClassSet s(p);
    for (i64 m : members) s.insert(SquareClass::of(p, m));
    return s;
}

void SquareClassSet::insert(const SquareClass& c) {
    if (c.prime() != p_) throw DomainError("square class inserted at the wrong prime");
    mask_ = static_cast<std::uint8_t>(mask_ | (1u << c.index()));
}

bool SquareClassSet::contains(const SquareClass& c) const {
    return c.prime() == p_ && ((mask_ >> c.index()) & 1u);
}

int SquareClassSet::size() const { return __builtin_popcount(mask_); }

bool SquareClassSet::is_full() const { return size() == square_class_count(p_); }

bool SquareClassSet::is_subset_of(const SquareClassSet& other) const {
    return p_ == other.p_ && (mask_ & ~other.mask_) == 0;
}

bool SquareClassSet::is_subgroup() const {
    if ((mask_ & 1u) == 0) return false;
    const auto elems = elements();
    for (const auto& x : elems) {
        for (const auto& y : elems) {
            if (!contains(x * y)) return false;
        }
    }
    return true;
}

std::vector<SquareClass> SquareClassSet::elements() const {
    std::vector<SquareClass> out;
    for (int i = 0; i < square_class_count(p_); ++i) {
        if ((mask_ >> i) & 1u) out.push_back(SquareClass::from_index(p_, i));
    }
    return out;
}

SquareClassSet SquareClassSet::translate(const SquareClass& x) const {
    SquareClassSet out(p_);
    for (const auto& e : elements()) out.insert(e * x);
    return out;
}

std::string SquareClassSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& e : elements()) {
        if (!first) os << ", ";
        os << e.representative();
        first = false;
    }
    os << '}';
    return os.str();
}

SquareClassSet subgroup_generate(i64 p, std::span<const SquareClass> gens) {
    SquareClassSet group = SquareClassSet::identity(p);
    for (const auto& g : gens) {
        if (g.prime() != p) throw DomainError("generator at the wrong prime");
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& x : group.elements()) {
            for (const auto& g : gens) {
                const SquareClass y = x * g;
                if (!group.contains(y)) {
                    group.insert(y);
                    grew = true;
                }
            }
        }
    }
    return group;
}

SquareClassSet subgroup_generate(const SquareClassSet& gens) {
    const auto elems = gens.elements();
    return subgroup_generate(gens.prime(), elems);
}

SquareClassSet norm_group(i64 p, i64 D) {
    require_prime(p);
    if (D <= 0) throw DomainError("norm_group: D must be positive");
    // Every class of the norm group is hit by some integral x^2 + D y^2; a box of
    // side 8p reaches all residues modulo 8p^2 well before it matters.
    const i64 bound = 8 * p;
    SquareClassSet values(p);
    for (i64 x = 0; x <= bound; ++x) {
        for (i64 y = 0; y <= bound; ++y) {
            if (x == 0 && y == 0) continue;
            values.insert(SquareClass::of(p, static_cast<i128>(x) * x + static_cast<i128>(D) * y * y));
        }
    }
    SquareClassSet group = subgroup_generate(values);
    const int index = square_class_count(p) / group.size();
    if (index > 2) throw std::logic_error("norm_group: enumeration produced a subgroup of index > 2");
    return group;
}

SquareClassSet hilbert_kernel(i64 p, i128 beta) {
    SquareClassSet out(p);
    for (int i = 0; i < square_class_count(p); ++i) {
        const SquareClass c = SquareClass::from_index(p, i);
        if (hilbert_symbol(c.representative(), beta, p) == 1) out.insert(c);
    }
    return out;
}

}  // namespace pentaform
