#pragma once

// Bitset sumset kernels: a serial reference and an OpenMP version that must agree bit for bit.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "pentaform/numth.hpp"

namespace pentaform {

/// Fixed-length bitset over [0, size).
class Bitmap {
public:
    Bitmap() = default;
    explicit Bitmap(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= u64{1} << (i & 63); }
    std::size_t count() const;

    std::span<u64> words() { return words_; }
    std::span<const u64> words() const { return words_; }

    /// Clears bits at positions >= size() in the last word.
    void trim();

    bool operator==(const Bitmap&) const = default;

private:
    std::size_t nbits_ = 0;
    std::vector<u64> words_;
};

namespace sieve {

/// Sorted distinct values coef * P5(k) <= limit over all integers k.
std::vector<i64> scaled_pentagonals(i64 coef, i64 limit);

Bitmap indicator(std::span<const i64> values, std::size_t nbits);

/// dst[lo, hi) |= (src << shift)[lo, hi), word indices.
void or_shifted(std::span<u64> dst, std::span<const u64> src, std::size_t shift, std::size_t lo, std::size_t hi);

/// {a + b : a in shifts, b in base} truncated to base.size(). Reference loop.
Bitmap sumset_serial(std::span<const i64> shifts, const Bitmap& base);

/// Same result; destination words are tiled and tiles distributed over threads.
/// threads <= 0 uses the OpenMP default.
Bitmap sumset_omp(std::span<const i64> shifts, const Bitmap& base, int threads = 0);

/// Bit n set iff n = c0 P5(x) + c1 P5(y) + c2 P5(z) for some integers, 0 <= n <= limit.
Bitmap represented_serial(const std::array<i64, 3>& coef, i64 limit);
Bitmap represented_omp(const std::array<i64, 3>& coef, i64 limit, int threads = 0);

}  // namespace sieve
}  // namespace pentaform
