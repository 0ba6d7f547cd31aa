#include <doctest.h>

#include <random>
#include <vector>

#include "pentaform/numth.hpp"

using namespace pentaform;

namespace {

// (alpha, beta)_p by searching for a primitive solution of z^2 = alpha x^2 + beta y^2 modulo p^k.
// alpha and beta are first reduced to valuation 0 or 1, which leaves the symbol unchanged.
int brute_hilbert(i64 alpha, i64 beta, i64 p) {
    auto reduce = [p](i64 x) {
        while (x % (p * p) == 0) x /= p * p;
        return x;
    };
    alpha = reduce(alpha);
    beta = reduce(beta);
    const int k = p == 2 ? 7 : 3;
    i64 m = 1;
    for (int i = 0; i < k; ++i) m *= p;
    std::vector<char> sq_any(m, 0), sq_unit(m, 0);
    for (i64 z = 0; z < m; ++z) {
        const i64 t = z * z % m;
        sq_any[t] = 1;
        if (z % p != 0) sq_unit[t] = 1;
    }
    auto md = [m](i64 x) { return ((x % m) + m) % m; };
    const i64 am = md(alpha), bm = md(beta);
    for (i64 x = 0; x < m; ++x) {
        for (i64 y = 0; y < m; ++y) {
            const i64 t = md(am * (x * x % m) + bm * (y * y % m));
            const bool primitive_xy = x % p != 0 || y % p != 0;
            if (primitive_xy ? sq_any[t] : sq_unit[t]) return 1;
        }
    }
    return -1;
}

i64 brute_squarefree(i64 y) {
    for (i64 d = 2; d * d <= y; ++d) {
        while (y % (d * d) == 0) y /= d * d;
    }
    return y;
}

}  // namespace

TEST_CASE("pentagonal values") {
    CHECK(pentagonal(0) == 0);
    CHECK(pentagonal(1) == 1);
    CHECK(pentagonal(-1) == 2);
    CHECK(pentagonal(2) == 5);
    CHECK(pentagonal(-2) == 7);
    CHECK(pentagonal(3) == 12);
    CHECK_THROWS_AS(pentagonal((i64{1} << 30) + 1), RangeError);
    for (i64 x = -50; x <= 50; ++x) CHECK(24 * pentagonal(x) + 1 == (6 * x - 1) * (6 * x - 1));
}

TEST_CASE("valuations, strip_prime and factorize") {
    CHECK(padic_valuation(3, 405) == 4);
    CHECK(padic_valuation(2, 96) == 5);
    CHECK(padic_valuation(5, -250) == 3);
    CHECK_THROWS_AS(padic_valuation(3, 0), DomainError);
    CHECK(strip_prime(3, 405) == 5);
    const auto f = factorize(2 * 2 * 3 * 7 * 7 * 7 * 13);
    REQUIRE(f.size() == 4);
    CHECK(f[0] == std::pair<i64, int>{2, 2});
    CHECK(f[2] == std::pair<i64, int>{7, 3});
    CHECK(is_prime(999983));
    CHECK_FALSE(is_prime(999981));
}

TEST_CASE("squarefree_part matches brute force") {
    for (i64 y = 1; y <= 5000; ++y) CHECK(squarefree_part(y) == brute_squarefree(y));
    CHECK(squarefree_part(405) == 5);
    CHECK(squarefree_part(351) == 39);
}

TEST_CASE("isqrt and is_square") {
    for (i64 x = 0; x < 20000; ++x) {
        const i64 r = isqrt(x);
        CHECK(r * r <= x);
        CHECK((r + 1) * (r + 1) > x);
        CHECK(is_square(x) == (r * r == x));
    }
    const i128 big = static_cast<i128>(3'000'000'007LL) * 3'000'000'007LL;
    CHECK(is_square(big));
    CHECK_FALSE(is_square(big + 1));
}

TEST_CASE("legendre matches squares mod p") {
    for (i64 p : {3, 5, 7, 11, 13, 101}) {
        std::vector<int> sq(p, -1);
        sq[0] = 0;
        for (i64 x = 1; x < p; ++x) sq[x * x % p] = 1;
        for (i64 a = -3 * p; a <= 3 * p; ++a) CHECK(legendre(a, p) == sq[((a % p) + p) % p]);
    }
    CHECK_THROWS_AS(legendre(1, 2), DomainError);
    CHECK_THROWS_AS(legendre(1, 9), DomainError);
}

TEST_CASE("hilbert symbol matches primitive-solution search") {
    const std::vector<i64> vals{1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 7, -7, 10, -10, 14, 15, -15, 21, 35};
    for (i64 p : {2, 3, 5, 7}) {
        for (i64 a : vals) {
            for (i64 b : vals) {
                INFO("p=" << p << " a=" << a << " b=" << b);
                CHECK(hilbert_symbol(a, b, p) == brute_hilbert(a, b, p));
            }
        }
    }
}

TEST_CASE("hilbert symbol algebraic identities") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<i64> d(-500, 500);
    for (int t = 0; t < 3000; ++t) {
        i64 a = 0, b = 0, c = 0;
        while (a == 0) a = d(rng);
        while (b == 0) b = d(rng);
        while (c == 0) c = d(rng);
        for (i64 p : {kInfinitePlace, i64{2}, i64{3}, i64{5}, i64{7}}) {
            CHECK(hilbert_symbol(a, b, p) == hilbert_symbol(b, a, p));
            CHECK(hilbert_symbol(a, -a, p) == 1);
            CHECK(hilbert_symbol(a, b * c, p) == hilbert_symbol(a, b, p) * hilbert_symbol(a, c, p));
            if (a != 1) CHECK(hilbert_symbol(a, 1 - a, p) == 1);
        }
    }
    CHECK(hilbert_symbol(-1, -1, kInfinitePlace) == -1);
    CHECK(hilbert_symbol(-1, -1, 2) == -1);
    CHECK(hilbert_symbol(Rational::of(3, 4), Rational::of(-1, 1), 3) == hilbert_symbol(3, -1, 3));
}

TEST_CASE("residue and mod_pow") {
    CHECK(Residue::of(-7, 24).value == 17);
    CHECK(mod_pow(3, 100, 1'000'000'007) == 886041711);
    CHECK(gcd(84, 36) == 12);
}
