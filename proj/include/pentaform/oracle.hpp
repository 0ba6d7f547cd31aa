#pragma once

// Brute-force ground truth: witnesses, exception sieves, empirical verdicts.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pentaform/lattice.hpp"
#include "pentaform/sieve.hpp"

namespace pentaform {

/// n = a P5(x) + 2^r b P5(y) + 2^s c P5(z).
struct Witness {
    i64 x = 0;
    i64 y = 0;
    i64 z = 0;

    bool operator==(const Witness&) const = default;
};

inline constexpr i64 kMaxQueryN = (i64{1} << 40) / 24;
inline constexpr i64 kDefaultMaxBitmapBits = 100'000'000;

class ResourceCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// l(n) = 24 n + eps.
i128 shifted_value(const FormParams& params, i64 n);

bool verify_witness(const FormParams& params, i64 n, const Witness& w);

/// Exhaustive bounded search; throws RangeError outside [0, 2^40/24].
std::optional<Witness> is_representable(const FormParams& params, i64 n);

/// Bitmap cap in bits: PENTAFORM_MAX_BITMAP if set, else 10^8.
i64 max_bitmap_bits();

enum class SieveBackend { Serial, OpenMP };

/// Bits 0..N; throws ResourceCapExceeded when N + 1 exceeds the cap.
Bitmap represented_bitmap(const FormParams& params, i64 N, SieveBackend backend = SieveBackend::OpenMP,
                          int threads = 0);

struct Window {
    i64 lo = 0;  ///< exclusive
    i64 hi = 0;  ///< inclusive
    std::size_t count = 0;
};

struct ExceptionReport {
    i64 limit = 0;
    std::vector<i64> exceptions;
    /// (N/2^(k+1), N/2^k] for k = 0, 1, ... (integer division), top window first.
    std::vector<Window> windows;
};

std::vector<Window> dyadic_windows(i64 N);

ExceptionReport exceptions(const FormParams& params, i64 N, SieveBackend backend = SieveBackend::OpenMP,
                           int threads = 0);

enum class Empirical { LikelyAU, LikelyNotAU, Inconclusive };

std::string to_string(Empirical e);
std::optional<Empirical> empirical_from_string(const std::string& s);

/// Heuristic read of the top windows of a report.
Empirical empirical_verdict(const ExceptionReport& report);
Empirical empirical_verdict(const FormParams& params, i64 N);

/// k > 0 with 24n + eps = tau k^2, if any.
std::optional<i64> square_class_root(const FormParams& params, i64 n, i64 tau);

}  // namespace pentaform
