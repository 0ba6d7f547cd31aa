#include "pentaform/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

namespace pentaform {

namespace {

bool coprime6(i64 m) { return m % 2 != 0 && m % 3 != 0; }

// Pentagonal index x with |6x - 1| = m, for m coprime to 6.
i64 index_of(i64 m) { return m % 6 == 5 ? (m + 1) / 6 : (1 - m) / 6; }

}  // namespace

i128 shifted_value(const FormParams& params, i64 n) { return static_cast<i128>(24) * n + params.eps; }

bool verify_witness(const FormParams& params, i64 n, const Witness& w) {
    const auto c = params.coefficients();
    const i128 v = static_cast<i128>(c[0]) * pentagonal(w.x) + static_cast<i128>(c[1]) * pentagonal(w.y) +
                   static_cast<i128>(c[2]) * pentagonal(w.z);
    return v == n;
}

std::optional<Witness> is_representable(const FormParams& params, i64 n) {
    if (n < 0 || n > kMaxQueryN) throw RangeError("is_representable: n out of range");
    const auto coef = params.coefficients();
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int x, int y) { return coef[x] > coef[y]; });
    const i128 c0 = coef[order[0]], c1 = coef[order[1]], c2 = coef[order[2]];
    const i128 l = shifted_value(params, n);
    for (i64 u = 1; c0 * u * u + c1 + c2 <= l; ++u) {
        if (!coprime6(u)) continue;
        const i128 rest = l - c0 * u * u;
        for (i64 v = 1; c1 * v * v + c2 <= rest; ++v) {
            if (!coprime6(v)) continue;
            const i128 last = rest - c1 * v * v;
            if (last % c2 != 0 || !is_square(last / c2)) continue;
            const i64 w = isqrt(last / c2);
            if (!coprime6(w)) continue;
            std::array<i64, 3> idx{};
            idx[order[0]] = index_of(u);
            idx[order[1]] = index_of(v);
            idx[order[2]] = index_of(w);
            return Witness{idx[0], idx[1], idx[2]};
        }
    }
    return std::nullopt;
}

i64 max_bitmap_bits() {
    if (const char* env = std::getenv("PENTAFORM_MAX_BITMAP")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultMaxBitmapBits;
}

Bitmap represented_bitmap(const FormParams& params, i64 N, SieveBackend backend, int threads) {
    if (N < 0) throw RangeError("represented_bitmap: negative limit");
    if (N + 1 > max_bitmap_bits())
        throw ResourceCapExceeded("bitmap of " + std::to_string(N + 1) + " bits exceeds cap of " +
                                  std::to_string(max_bitmap_bits()));
    const auto coef = params.coefficients();
    return backend == SieveBackend::Serial ? sieve::represented_serial(coef, N)
                                           : sieve::represented_omp(coef, N, threads);
}

std::vector<Window> dyadic_windows(i64 N) {
    std::vector<Window> w;
    for (int k = 0; k < 63 && (N >> k) >= 1; ++k) w.push_back({N >> (k + 1), N >> k, 0});
    return w;
}

ExceptionReport exceptions(const FormParams& params, i64 N, SieveBackend backend, int threads) {
    const Bitmap bits = represented_bitmap(params, N, backend, threads);
    ExceptionReport rep;
    rep.limit = N;
    rep.windows = dyadic_windows(N);
    for (i64 n = 1; n <= N; ++n) {
        if (!bits.test(static_cast<std::size_t>(n))) rep.exceptions.push_back(n);
    }
    for (auto& w : rep.windows) {
        const auto lo = std::upper_bound(rep.exceptions.begin(), rep.exceptions.end(), w.lo);
        const auto hi = std::upper_bound(rep.exceptions.begin(), rep.exceptions.end(), w.hi);
        w.count = static_cast<std::size_t>(hi - lo);
    }
    return rep;
}

std::string to_string(Empirical e) {
    switch (e) {
        case Empirical::LikelyAU: return "likely_au";
        case Empirical::LikelyNotAU: return "likely_not_au";
        case Empirical::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

std::optional<Empirical> empirical_from_string(const std::string& s) {
    for (Empirical e : {Empirical::LikelyAU, Empirical::LikelyNotAU, Empirical::Inconclusive}) {
        if (to_string(e) == s) return e;
    }
    return std::nullopt;
}

Empirical empirical_verdict(const ExceptionReport& report) {
    const auto& w = report.windows;
    auto hit = [&](std::size_t k) { return k < w.size() && w[k].count > 0; };
    if (!hit(0) && !hit(1)) return Empirical::LikelyAU;
    if (static_cast<int>(hit(0)) + hit(1) + hit(2) >= 2) return Empirical::LikelyNotAU;
    return Empirical::Inconclusive;
}

Empirical empirical_verdict(const FormParams& params, i64 N) {
    if (N < 10'000) throw DomainError("empirical_verdict: N must be at least 10^4");
    return empirical_verdict(exceptions(params, N));
}

std::optional<i64> square_class_root(const FormParams& params, i64 n, i64 tau) {
    if (tau <= 0) return std::nullopt;
    const i128 l = shifted_value(params, n);
    if (l % tau != 0 || !is_square(l / tau)) return std::nullopt;
    return isqrt(l / tau);
}

}  // namespace pentaform
