#include <doctest.h>

#include <random>

#include "pentaform/squareclass.hpp"

using namespace pentaform;

TEST_CASE("class indexing round-trips") {
    for (i64 p : {2, 3, 5, 7, 11}) {
        CHECK(square_class_count(p) == (p == 2 ? 8 : 4));
        for (int i = 0; i < square_class_count(p); ++i) {
            const auto c = SquareClass::from_index(p, i);
            CHECK(c.index() == i);
            CHECK(SquareClass::of(p, c.representative()) == c);
        }
    }
    CHECK(SquareClass::of(2, 1).representative() == 1);
    CHECK(SquareClass::of(2, 17) == SquareClass::of(2, 1));
    CHECK(SquareClass::of(2, 12) == SquareClass::of(2, 3));
    CHECK(SquareClass::of(3, 18) == SquareClass::of(3, 2));
    CHECK(SquareClass::of(3, 2) == SquareClass::of(3, -1));
    CHECK(SquareClass::of(5, Rational::of(3, 4)) == SquareClass::of(5, 3));
}

TEST_CASE("class of a product is the product of classes") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<i64> d(-100000, 100000);
    for (int t = 0; t < 5000; ++t) {
        i64 x = 0, y = 0;
        while (x == 0) x = d(rng);
        while (y == 0) y = d(rng);
        for (i64 p : {2, 3, 5, 13}) {
            CHECK(SquareClass::of(p, static_cast<i128>(x) * y) == SquareClass::of(p, x) * SquareClass::of(p, y));
        }
    }
}

TEST_CASE("generated sets are subgroups containing the generators") {
    for (i64 p : {2, 3, 7}) {
        const int n = square_class_count(p);
        for (int mask = 0; mask < (1 << n); ++mask) {
            SquareClassSet gens(p);
            for (int i = 0; i < n; ++i) {
                if (mask >> i & 1) gens.insert(SquareClass::from_index(p, i));
            }
            const auto g = subgroup_generate(gens);
            CHECK(g.is_subgroup());
            CHECK(gens.is_subset_of(g));
            CHECK(n % g.size() == 0);
        }
    }
}

TEST_CASE("norm groups equal Hilbert kernels") {
    for (i64 p : {2, 3, 5, 7, 11, 13}) {
        for (i64 D : {1, 2, 3, 6, 5, 7}) {
            INFO("p=" << p << " D=" << D);
            const auto n = norm_group(p, D);
            CHECK(n == hilbert_kernel(p, -D));
            CHECK(n.is_subgroup());
            CHECK((n.is_full() || 2 * n.size() == square_class_count(p)));
        }
    }
    CHECK(norm_group(3, 3) == SquareClassSet::of(3, {1, 3}));
    CHECK(norm_group(3, 6) == SquareClassSet::of(3, {1, -3}));
    CHECK(norm_group(2, 1) == SquareClassSet::of(2, {1, 5, 2, 10}));
    CHECK(norm_group(2, 3).size() == 4);
    for (const auto& c : norm_group(2, 3).elements()) CHECK(c.val_parity() == 0);
}

TEST_CASE("set operations") {
    auto s = SquareClassSet::of(2, {1, 5});
    CHECK(s.contains(5));
    CHECK(s.contains(45));
    CHECK_FALSE(s.contains(3));
    CHECK(s.translate(SquareClass::of(2, 2)) == SquareClassSet::of(2, {2, 10}));
    CHECK(SquareClassSet::full(3).is_full());
    CHECK(SquareClassSet::identity(3).size() == 1);
    CHECK(SquareClassSet::of(3, {1, 3}).to_string() == "{1, 3}");
}
