#pragma once

// Exact elementary number theory on 64/128-bit integers.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pentaform {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

/// Marks the real place in hilbert_symbol.
inline constexpr i64 kInfinitePlace = 0;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Least nonnegative residue of value modulo modulus.
struct Residue {
    i64 value = 0;
    i64 modulus = 1;

    static Residue of(i128 x, i64 modulus);
    bool operator==(const Residue&) const = default;
};

/// A nonzero rational num/den with den > 0 and gcd(num, den) = 1.
struct Rational {
    i64 num = 1;
    i64 den = 1;

    static Rational of(i64 num, i64 den);
};

std::string to_string(i128 x);

i64 pentagonal(i64 x);

int padic_valuation(i64 p, i128 x);

/// x with every factor p removed.
i128 strip_prime(i64 p, i128 x);

bool is_prime(i64 n);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<i64, int>> factorize(i64 n);

i64 squarefree_part(i64 y);

i64 isqrt(i128 x);
bool is_square(i128 x);

i64 mod_pow(i64 base, u64 exp, i64 mod);

/// Legendre symbol (a/p) for an odd prime p.
int legendre(i128 a, i64 p);

/// Quadratic Hilbert symbol (alpha, beta)_p; p == kInfinitePlace is the real place.
int hilbert_symbol(i128 alpha, i128 beta, i64 p);
int hilbert_symbol(Rational alpha, Rational beta, i64 p);

i64 gcd(i64 a, i64 b);

}  // namespace pentaform
