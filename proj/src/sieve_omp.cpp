#include <omp.h>

#include <algorithm>

#include "pentaform/sieve.hpp"

namespace pentaform::sieve {

namespace {
constexpr std::size_t kTileWords = 2048;  // 16 KiB of destination per tile
}

Bitmap sumset_omp(std::span<const i64> shifts, const Bitmap& base, int threads) {
    Bitmap out(base.size());
    std::vector<std::size_t> valid;
    valid.reserve(shifts.size());
    for (i64 s : shifts) {
        if (s >= 0 && static_cast<std::size_t>(s) < base.size()) valid.push_back(static_cast<std::size_t>(s));
    }
    std::sort(valid.begin(), valid.end());

    const std::size_t nw = out.words().size();
    const auto ntiles = static_cast<long>((nw + kTileWords - 1) / kTileWords);
    auto dst = out.words();
    const auto src = base.words();
    const int nt = threads > 0 ? threads : omp_get_max_threads();

    // Each tile of the destination is owned by one thread, so no merge step is needed.
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
    for (long t = 0; t < ntiles; ++t) {
        const std::size_t lo = static_cast<std::size_t>(t) * kTileWords;
        const std::size_t hi = std::min(nw, lo + kTileWords);
        for (std::size_t s : valid) {
            if (s / 64 >= hi) break;
            or_shifted(dst, src, s, lo, hi);
        }
    }
    out.trim();
    return out;
}

}  // namespace pentaform::sieve
