#include "pentaform/numth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pentaform {

Residue Residue::of(i128 x, i64 modulus) {
    if (modulus <= 0) throw DomainError("residue modulus must be positive");
    i128 r = x % modulus;
    if (r < 0) r += modulus;
    return Residue{static_cast<i64>(r), modulus};
}

Rational Rational::of(i64 num, i64 den) {
    if (num == 0 || den == 0) throw DomainError("rational must be nonzero with nonzero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const i64 g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

std::string to_string(i128 x) {
    if (x == 0) return "0";
    const bool neg = x < 0;
    u128 m = neg ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x);
    std::string out;
    while (m != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
        m /= 10;
    }
    if (neg) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

i64 pentagonal(i64 x) {
    constexpr i64 kBound = i64{1} << 30;
    if (x > kBound || x < -kBound) throw RangeError("pentagonal: |x| exceeds 2^30");
    return (3 * x * x - x) / 2;
}

int padic_valuation(i64 p, i128 x) {
    if (p < 2) throw DomainError("padic_valuation: p must be prime");
    if (x == 0) throw DomainError("padic_valuation: valuation of zero is undefined");
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

i128 strip_prime(i64 p, i128 x) {
    if (x == 0) throw DomainError("strip_prime: zero");
    while (x % p == 0) x /= p;
    return x;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (i64 d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    if (n < 1) throw DomainError("factorize: argument must be positive");
    std::vector<std::pair<i64, int>> out;
    auto take = [&](i64 d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) out.emplace_back(d, e);
    };
    take(2);
    take(3);
    for (i64 d = 5; d <= n / d; d += 6) {
        take(d);
        take(d + 2);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

i64 squarefree_part(i64 y) {
    if (y < 1 || y > (i64{1} << 62)) throw RangeError("squarefree_part: y outside [1, 2^62]");
    i64 out = 1;
    for (auto [p, e] : factorize(y)) {
        if (e % 2 == 1) out *= p;
    }
    return out;
}

i64 isqrt(i128 x) {
    if (x < 0) throw DomainError("isqrt of negative value");
    auto r = static_cast<i128>(std::sqrt(static_cast<long double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return static_cast<i64>(r);
}

bool is_square(i128 x) {
    if (x < 0) return false;
    const i128 r = isqrt(x);
    return r * r == x;
}

i64 mod_pow(i64 base, u64 exp, i64 mod) {
    i128 result = 1 % mod;
    i128 b = base % mod;
    if (b < 0) b += mod;
    while (exp != 0) {
        if (exp & 1) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<i64>(result);
}

int legendre(i128 a, i64 p) {
    if (p < 3 || !is_prime(p)) throw DomainError("legendre: p must be an odd prime");
    const i64 r = Residue::of(a, p).value;
    if (r == 0) return 0;
    return mod_pow(r, static_cast<u64>((p - 1) / 2), p) == 1 ? 1 : -1;
}

namespace {

int sign_power(int e) { return (e % 2 == 0) ? 1 : -1; }

int hilbert_odd(i128 alpha, i128 beta, i64 p) {
    const int va = padic_valuation(p, alpha);
    const int vb = padic_valuation(p, beta);
    const i128 ua = strip_prime(p, alpha);
    const i128 ub = strip_prime(p, beta);
    int result = 1;
    if ((va * vb) % 2 == 1 && ((p - 1) / 2) % 2 == 1) result = -result;
    if (vb % 2 == 1) result *= legendre(ua, p);
    if (va % 2 == 1) result *= legendre(ub, p);
    return result;
}

int hilbert_two(i128 alpha, i128 beta) {
    const int va = padic_valuation(2, alpha);
    const int vb = padic_valuation(2, beta);
    const int ua = static_cast<int>(Residue::of(strip_prime(2, alpha), 8).value);
    const int ub = static_cast<int>(Residue::of(strip_prime(2, beta), 8).value);
    const int eps_a = ((ua - 1) / 2) % 2;
    const int eps_b = ((ub - 1) / 2) % 2;
    const int omega_a = ((ua * ua - 1) / 8) % 2;
    const int omega_b = ((ub * ub - 1) / 8) % 2;
    return sign_power(eps_a * eps_b + va * omega_b + vb * omega_a);
}

}  // namespace

int hilbert_symbol(i128 alpha, i128 beta, i64 p) {
    if (alpha == 0 || beta == 0) throw DomainError("hilbert_symbol: arguments must be nonzero");
    if (p == kInfinitePlace) return (alpha < 0 && beta < 0) ? -1 : 1;
    if (!is_prime(p)) throw DomainError("hilbert_symbol: place must be a prime or infinity");
    if (p == 2) return hilbert_two(alpha, beta);
    return hilbert_odd(alpha, beta, p);
}

int hilbert_symbol(Rational alpha, Rational beta, i64 p) {
    // num/den and num*den differ by the square den^2.
    return hilbert_symbol(static_cast<i128>(alpha.num) * alpha.den,
                          static_cast<i128>(beta.num) * beta.den, p);
}

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

}  // namespace pentaform
