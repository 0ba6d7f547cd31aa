#include "pentaform/sieve.hpp"

#include <algorithm>
#include <bit>

namespace pentaform {

std::size_t Bitmap::count() const {
    std::size_t n = 0;
    for (u64 w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

void Bitmap::trim() {
    if (nbits_ % 64 != 0) words_.back() &= (u64{1} << (nbits_ % 64)) - 1;
}

namespace sieve {

std::vector<i64> scaled_pentagonals(i64 coef, i64 limit) {
    if (coef <= 0) throw DomainError("scaled_pentagonals: coefficient must be positive");
    std::vector<i64> out;
    if (limit < 0) return out;
    const i128 lim = limit;
    // P5(k) and P5(-k) for k >= 0 are k(3k - 1)/2 and k(3k + 1)/2.
    for (i128 k = 0;; ++k) {
        const i128 lo = static_cast<i128>(coef) * (k * (3 * k - 1) / 2);
        if (lo > lim) break;
        out.push_back(static_cast<i64>(lo));
        const i128 hi = static_cast<i128>(coef) * (k * (3 * k + 1) / 2);
        if (hi <= lim) out.push_back(static_cast<i64>(hi));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Bitmap indicator(std::span<const i64> values, std::size_t nbits) {
    Bitmap b(nbits);
    for (i64 v : values) {
        if (v >= 0 && static_cast<std::size_t>(v) < nbits) b.set(static_cast<std::size_t>(v));
    }
    return b;
}

void or_shifted(std::span<u64> dst, std::span<const u64> src, std::size_t shift, std::size_t lo, std::size_t hi) {
    const std::size_t ws = shift / 64;
    const unsigned bs = shift % 64;
    hi = std::min(hi, dst.size());
    for (std::size_t i = std::max(lo, ws); i < hi; ++i) {
        const std::size_t j = i - ws;
        u64 v = src[j] << bs;
        if (bs != 0 && j > 0) v |= src[j - 1] >> (64 - bs);
        dst[i] |= v;
    }
}

Bitmap sumset_serial(std::span<const i64> shifts, const Bitmap& base) {
    Bitmap out(base.size());
    const std::size_t nw = out.words().size();
    for (i64 s : shifts) {
        if (s < 0 || static_cast<std::size_t>(s) >= base.size()) continue;
        or_shifted(out.words(), base.words(), static_cast<std::size_t>(s), 0, nw);
    }
    out.trim();
    return out;
}

namespace {

template <class Sumset>
Bitmap represented_with(const std::array<i64, 3>& coef, i64 limit, Sumset sumset) {
    if (limit < 0) throw DomainError("represented: negative limit");
    std::array<i64, 3> c = coef;
    std::sort(c.begin(), c.end());
    const auto nbits = static_cast<std::size_t>(limit) + 1;
    // The densest set is the base; the sparser two are applied as shift lists.
    Bitmap acc = indicator(scaled_pentagonals(c[0], limit), nbits);
    acc = sumset(scaled_pentagonals(c[1], limit), acc);
    return sumset(scaled_pentagonals(c[2], limit), acc);
}

}  // namespace

Bitmap represented_serial(const std::array<i64, 3>& coef, i64 limit) {
    return represented_with(coef, limit, [](const std::vector<i64>& v, const Bitmap& b) { return sumset_serial(v, b); });
}

Bitmap represented_omp(const std::array<i64, 3>& coef, i64 limit, int threads) {
    return represented_with(coef, limit,
                            [threads](const std::vector<i64>& v, const Bitmap& b) { return sumset_omp(v, b, threads); });
}

}  // namespace sieve
}  // namespace pentaform
