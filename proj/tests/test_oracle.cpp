#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "pentaform/classifier.hpp"
#include "pentaform/oracle.hpp"

using namespace pentaform;

TEST_CASE("witness examples") {
    const auto w = is_representable(make_params(1, 1, 5, 0, 0), 1);
    REQUIRE(w.has_value());
    CHECK(verify_witness(make_params(1, 1, 5, 0, 0), 1, *w));
    CHECK_FALSE(is_representable(make_params(5, 9, 9, 2, 2), 2).has_value());
    const auto p = make_params(1, 9, 9, 2, 2);
    const auto v = is_representable(p, 2);
    REQUIRE(v.has_value());
    CHECK(verify_witness(p, 2, *v));
    CHECK(std::abs(6 * v->x - 1) == 7);
    CHECK(std::abs(6 * v->y - 1) == 1);
    CHECK(std::abs(6 * v->z - 1) == 1);
    CHECK(shifted_value(make_params(5, 9, 9, 2, 2), 2) == 125);
    CHECK_FALSE(verify_witness(p, 3, *v));
}

TEST_CASE("range errors") {
    const auto p = make_params(1, 1, 5, 0, 0);
    CHECK_THROWS_AS(is_representable(p, -1), RangeError);
    CHECK_THROWS_AS(is_representable(p, kMaxQueryN + 1), RangeError);
    CHECK_NOTHROW(is_representable(p, kMaxQueryN));
}

TEST_CASE("bitmap examples") {
    const auto bm = represented_bitmap(make_params(5, 9, 9, 2, 2), 100);
    CHECK(bm.test(0));
    CHECK_FALSE(bm.test(2));
    const auto d = represented_bitmap(make_params(1, 1, 5, 0, 0), 100);
    for (i64 n = 0; n <= 100; ++n) CHECK(d.test(n) == is_representable(make_params(1, 1, 5, 0, 0), n).has_value());
}

TEST_CASE("bitmap agrees with witness search for n <= 10^4 on every corpus tuple") {
    const i64 N = 10'000;
    std::size_t tuples = 0;
    for (i64 a = 1; a <= 15; a += 2) {
        for (i64 b = 1; b <= 15; b += 2) {
            for (i64 c = 1; c <= 15; c += 2) {
                for (int r = 0; r <= 6; ++r) {
                    for (int s = r; s <= 6; ++s) {
                        FormParams p;
                        try {
                            p = make_params(a, b, c, r, s);
                        } catch (const ParamError&) {
                            continue;
                        }
                        const auto bm = represented_bitmap(p, N, SieveBackend::Serial);
                        int bad = 0;
                        for (i64 n = 0; n <= N; ++n) {
                            const auto w = is_representable(p, n);
                            if (w.has_value() != bm.test(n) || (w && !verify_witness(p, n, *w))) ++bad;
                        }
                        INFO(to_string(p));
                        CHECK(bad == 0);
                        ++tuples;
                    }
                }
            }
        }
    }
    CHECK(tuples > 7000);
}

TEST_CASE("serial and OpenMP backends agree") {
    for (const auto& p : {make_params(5, 9, 9, 2, 2), make_params(1, 1, 5, 0, 0), make_params(15, 13, 7, 6, 6)}) {
        const auto s = represented_bitmap(p, 1'000'000, SieveBackend::Serial);
        for (int t : {1, 2, 4}) CHECK(represented_bitmap(p, 1'000'000, SieveBackend::OpenMP, t) == s);
    }
}

TEST_CASE("dyadic windows partition (0, N]") {
    for (i64 N : {1, 2, 3, 10, 1000, 200'000, 1'000'000, 999'999}) {
        const auto w = dyadic_windows(N);
        REQUIRE_FALSE(w.empty());
        CHECK(w.front().hi == N);
        CHECK(w.back().lo == 0);
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            CHECK(w[k].lo == w[k + 1].hi);
            CHECK(w[k].lo < w[k].hi);
        }
    }
}

TEST_CASE("exception report examples") {
    const auto flag = exceptions(make_params(5, 9, 9, 2, 2), 10'000);
    CHECK(std::find(flag.exceptions.begin(), flag.exceptions.end(), 2) != flag.exceptions.end());
    std::size_t total = 0;
    for (const auto& w : flag.windows) total += w.count;
    CHECK(total == flag.exceptions.size());
    const auto d = exceptions(make_params(1, 1, 5, 0, 0), 200'000);
    CHECK(d.windows.front().count == 0);
    const auto e = exceptions(make_params(1, 9, 9, 2, 2), 10'000);
    CHECK(std::find(e.exceptions.begin(), e.exceptions.end(), 4) != e.exceptions.end());
    CHECK(std::is_sorted(e.exceptions.begin(), e.exceptions.end()));
}

TEST_CASE("monotonicity in N") {
    for (const auto& p : {make_params(5, 9, 9, 2, 2), make_params(13, 9, 9, 6, 6), make_params(1, 3, 7, 1, 2)}) {
        const auto big = exceptions(p, 300'000);
        for (i64 N : {1000, 77'777, 150'000}) {
            const auto small = exceptions(p, N);
            std::vector<i64> cut;
            for (i64 n : big.exceptions) {
                if (n <= N) cut.push_back(n);
            }
            CHECK(cut == small.exceptions);
        }
    }
}

TEST_CASE("empirical verdict examples") {
    CHECK(empirical_verdict(make_params(5, 9, 9, 2, 2), 1'000'000) == Empirical::LikelyNotAU);
    CHECK(empirical_verdict(make_params(1, 1, 5, 0, 0), 200'000) == Empirical::LikelyAU);
    CHECK_THROWS(empirical_verdict(make_params(1, 1, 5, 0, 0), 1000));
    for (auto e : {Empirical::LikelyAU, Empirical::LikelyNotAU, Empirical::Inconclusive}) {
        CHECK(empirical_from_string(to_string(e)) == e);
    }
    ExceptionReport r;
    r.limit = 80;
    r.windows = dyadic_windows(80);
    CHECK(empirical_verdict(r) == Empirical::LikelyAU);
    r.windows[0].count = 1;
    CHECK(empirical_verdict(r) == Empirical::Inconclusive);
    r.windows[2].count = 1;
    CHECK(empirical_verdict(r) == Empirical::LikelyNotAU);
}

TEST_CASE("flagship top window lies in the tau class") {
    const auto p = make_params(5, 9, 9, 2, 2);
    const auto rep = exceptions(p, 1'000'000);
    REQUIRE(rep.windows.front().count > 0);
    for (i64 n : rep.exceptions) {
        if (n <= 500'000) continue;
        const auto k = square_class_root(p, n, 5);
        REQUIRE(k.has_value());
        CHECK((*k % 6 == 1 || *k % 6 == 5));
        CHECK(5 * static_cast<i128>(*k) * *k == shifted_value(p, n));
    }
    // Small exceptions outside the class exist, so the class statement is about the tail.
    CHECK_FALSE(square_class_root(p, 1, 5).has_value());
    CHECK(square_class_root(p, 2, 5) == std::optional<i64>(5));
}

TEST_CASE("resource cap") {
    const auto p = make_params(1, 1, 5, 0, 0);
    CHECK(max_bitmap_bits() == kDefaultMaxBitmapBits);
    CHECK_THROWS_AS(represented_bitmap(p, kDefaultMaxBitmapBits), ResourceCapExceeded);
    ::setenv("PENTAFORM_MAX_BITMAP", "1000", 1);
    CHECK(max_bitmap_bits() == 1000);
    CHECK_THROWS_AS(exceptions(p, 1000), ResourceCapExceeded);
    CHECK_NOTHROW(exceptions(p, 999));
    ::unsetenv("PENTAFORM_MAX_BITMAP");
}
