#include "pentaform/lattice.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace pentaform {

std::string to_string(ParamViolation v) {
    switch (v) {
        case ParamViolation::NonPositiveCoefficient: return "non_positive_coefficient";
        case ParamViolation::EvenCoefficient: return "even_coefficient";
        case ParamViolation::NegativeExponent: return "negative_exponent";
        case ParamViolation::OutOfRange: return "out_of_range";
        case ParamViolation::GcdViolation: return "gcd_violation";
        case ParamViolation::EpsilonDivisibleBy2Or3: return "epsilon_divisible_by_2_or_3";
    }
    return "unknown";
}

ParamError::ParamError(ParamViolation kind)
    : std::invalid_argument("condition (*) violated: " + pentaform::to_string(kind)), kind_(kind) {}

std::array<i64, 3> FormParams::coefficients() const {
    return {a, b << r, c << s};
}

std::optional<i128> FormParams::dM_exact() const {
    // 6^4 abc < 2^71 under the caps, so r + s <= 56 keeps the product in range.
    const i128 base = i128{1296} * abc();
    const int shift = r + s;
    if (shift > 126) return std::nullopt;
    const i128 limit = std::numeric_limits<i128>::max() >> shift;
    if (base > limit) return std::nullopt;
    return base << shift;
}

int FormParams::dM_valuation(i64 p) const {
    int v = padic_valuation(p, abc());
    if (p == 2) v += 4 + r + s;
    if (p == 3) v += 4;
    return v;
}

i64 FormParams::dM_unit_residue(i64 p) const {
    if (p < 3 || !is_prime(p)) throw DomainError("dM_unit_residue needs an odd prime");
    i128 unit = strip_prime(p, abc()) % p;
    const i64 six_part = (p == 3) ? mod_pow(16, 1, p) : mod_pow(6, 4, p);
    unit = unit * six_part % p;
    unit = unit * mod_pow(2, static_cast<u64>(r + s), p) % p;
    return Residue::of(unit, p).value;
}

std::string to_string(const FormParams& params) {
    std::ostringstream os;
    os << '(' << params.a << ',' << params.b << ',' << params.c << ',' << params.r << ',' << params.s << ')';
    return os.str();
}

std::vector<std::pair<i64, int>> abc_factorization(const FormParams& params) {
    std::map<i64, int> exps;
    for (i64 q : {params.a, params.b, params.c}) {
        for (auto [p, e] : factorize(q)) exps[p] += e;
    }
    return {exps.begin(), exps.end()};
}

i64 squarefree_abc(const FormParams& params) {
    i64 sf = 1;
    for (auto [p, e] : abc_factorization(params)) {
        if (e % 2 == 1) sf *= p;
    }
    return sf;
}

std::optional<ParamViolation> structural_violation(i64 a, i64 b, i64 c, int r, int s) {
    if (a <= 0 || b <= 0 || c <= 0) return ParamViolation::NonPositiveCoefficient;
    if (r < 0 || s < 0) return ParamViolation::NegativeExponent;
    if (a > kMaxCoefficient || b > kMaxCoefficient || c > kMaxCoefficient || r > kMaxExponent ||
        s > kMaxExponent)
        return ParamViolation::OutOfRange;
    if (a % 2 == 0 || b % 2 == 0 || c % 2 == 0) return ParamViolation::EvenCoefficient;
    if (std::gcd(std::gcd(a, b), c) != 1) return ParamViolation::GcdViolation;
    return std::nullopt;
}

FormParams make_params(i64 a, i64 b, i64 c, int r, int s) {
    if (r > s) {
        std::swap(b, c);
        std::swap(r, s);
    }
    if (auto v = structural_violation(a, b, c, r, s)) throw ParamError(*v);
    const i64 eps = a + (b << r) + (c << s);
    if (eps % 2 == 0 || eps % 3 == 0) throw ParamError(ParamViolation::EpsilonDivisibleBy2Or3);
    return FormParams{a, b, c, r, s, eps};
}

GramMatrix::GramMatrix(const std::array<std::array<i128, 3>, 3>& entries) : m_(entries) {
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < i; ++j) {
            if (m_[i][j] != m_[j][i]) throw DomainError("Gram matrix must be symmetric");
        }
    }
}

GramMatrix GramMatrix::diagonal(i128 d0, i128 d1, i128 d2) {
    return GramMatrix({{{d0, 0, 0}, {0, d1, 0}, {0, 0, d2}}});
}

GramMatrix GramMatrix::transformed(const std::array<std::array<i64, 3>, 3>& u) const {
    std::array<std::array<i128, 3>, 3> tmp{};
    std::array<std::array<i128, 3>, 3> out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) tmp[i][j] += u[i][k] * m_[k][j];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) out[i][j] += tmp[i][k] * u[j][k];
    return GramMatrix(out);
}

namespace {

bool mul_checked(i128 x, i128 y, i128& out) { return !__builtin_mul_overflow(x, y, &out); }
bool add_checked(i128 x, i128 y, i128& out) { return !__builtin_add_overflow(x, y, &out); }
bool sub_checked(i128 x, i128 y, i128& out) { return !__builtin_sub_overflow(x, y, &out); }

// 2x2 minor m[i0][j0]*m[i1][j1] - m[i0][j1]*m[i1][j0]
bool minor_checked(const GramMatrix& g, int i0, int i1, int j0, int j1, i128& out) {
    i128 x = 0;
    i128 y = 0;
    return mul_checked(g(i0, j0), g(i1, j1), x) && mul_checked(g(i0, j1), g(i1, j0), y) &&
           sub_checked(x, y, out);
}

}  // namespace

std::optional<i128> GramMatrix::determinant() const {
    i128 m0 = 0, m1 = 0, m2 = 0, t0 = 0, t1 = 0, t2 = 0, acc = 0;
    if (!minor_checked(*this, 1, 2, 1, 2, m0) || !minor_checked(*this, 1, 2, 0, 2, m1) ||
        !minor_checked(*this, 1, 2, 0, 1, m2))
        return std::nullopt;
    if (!mul_checked(m_[0][0], m0, t0) || !mul_checked(m_[0][1], m1, t1) || !mul_checked(m_[0][2], m2, t2))
        return std::nullopt;
    if (!sub_checked(t0, t1, acc) || !add_checked(acc, t2, acc)) return std::nullopt;
    return acc;
}

GramMatrix gram_M(const FormParams& p) {
    const i128 a = p.a;
    const i128 b2 = static_cast<i128>(p.b) << p.r;
    return GramMatrix({{{36 * a, 0, -6 * a}, {0, 36 * b2, -6 * b2}, {-6 * a, -6 * b2, p.eps}}});
}

int JordanSplitting::total_rank() const {
    int n = 0;
    for (const auto& c : components) n += c.rank;
    return n;
}

int JordanSplitting::weighted_scale_sum() const {
    int n = 0;
    for (const auto& c : components) n += c.scale_exp * c.rank;
    return n;
}

std::vector<int> JordanSplitting::scales_with_multiplicity() const {
    std::vector<int> out;
    for (const auto& c : components)
        for (int k = 0; k < c.rank; ++k) out.push_back(c.scale_exp);
    return out;
}

std::string JordanSplitting::to_string() const {
    std::ostringstream os;
    os << "p=" << p << " [";
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& c = components[i];
        if (i) os << ", ";
        os << "(scale " << c.scale_exp << ", rank " << c.rank << ", disc " << (c.disc_class == 1 ? "+" : "-");
        if (c.unit_class) os << ", unit " << (*c.unit_class == 1 ? "+" : "-");
        os << ')';
    }
    os << ']';
    return os.str();
}

JordanSplitting jordan_from_pieces(i64 p, std::vector<JordanPiece> pieces) {
    std::map<int, std::vector<int>> by_scale;
    for (const auto& piece : pieces) by_scale[piece.scale_exp].push_back(piece.unit_class);
    JordanSplitting out{p, {}};
    for (const auto& [scale, units] : by_scale) {
        JordanComponent comp;
        comp.scale_exp = scale;
        comp.rank = static_cast<int>(units.size());
        comp.disc_class = 1;
        for (int u : units) comp.disc_class *= u;
        if (comp.rank == 1) comp.unit_class = units.front();
        out.components.push_back(comp);
    }
    return out;
}

namespace {

// Arithmetic modulo m < 2^100.
class ModRing {
public:
    explicit ModRing(u128 m) : m_(m) {}

    u128 modulus() const { return m_; }

    u128 reduce(i128 x) const {
        const i128 m = static_cast<i128>(m_);
        i128 r = x % m;
        if (r < 0) r += m;
        return static_cast<u128>(r);
    }
    u128 add(u128 x, u128 y) const {
        u128 s = x + y;
        return s >= m_ ? s - m_ : s;
    }
    u128 sub(u128 x, u128 y) const { return x >= y ? x - y : x + (m_ - y); }
    u128 mul(u128 x, u128 y) const {
        constexpr u128 kSmall = u128{1} << 64;
        if (x < kSmall && y < kSmall) return (x * y) % m_;
        u128 result = 0;
        while (y != 0) {
            if (y & 1) result = add(result, x);
            x = add(x, x);
            y >>= 1;
        }
        return result;
    }
    u128 inverse(u128 x) const {
        i128 old_r = static_cast<i128>(x), r = static_cast<i128>(m_);
        i128 old_s = 1, s = 0;
        while (r != 0) {
            const i128 q = old_r / r;
            i128 tmp = old_r - q * r;
            old_r = r;
            r = tmp;
            tmp = old_s - q * s;
            old_s = s;
            s = tmp;
        }
        if (old_r != 1) throw std::logic_error("ModRing::inverse of a non-unit");
        return reduce(old_s);
    }

private:
    u128 m_;
};

using ModMatrix = std::array<std::array<u128, 3>, 3>;

u128 det_mod(const ModRing& R, const ModMatrix& a) {
    auto minor = [&](int i0, int i1, int j0, int j1) {
        return R.sub(R.mul(a[i0][j0], a[i1][j1]), R.mul(a[i0][j1], a[i1][j0]));
    };
    u128 d = R.mul(a[0][0], minor(1, 2, 1, 2));
    d = R.sub(d, R.mul(a[0][1], minor(1, 2, 0, 2)));
    d = R.add(d, R.mul(a[0][2], minor(1, 2, 0, 1)));
    return d;
}

// v_p of x modulo p^cap; a zero residue reports cap.
int valuation_mod(u128 x, i64 p, int cap) {
    if (x == 0) return cap;
    int v = 0;
    while (x % static_cast<u128>(p) == 0) {
        x /= static_cast<u128>(p);
        ++v;
    }
    return std::min(v, cap);
}

ModMatrix reduce_matrix(const ModRing& R, const GramMatrix& g) {
    ModMatrix a{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i][j] = R.reduce(g(i, j));
    return a;
}

}  // namespace

JordanSplitting jordan_odd(i64 p, const GramMatrix& g) {
    if (p < 3 || !is_prime(p)) throw DomainError("jordan_odd: p must be an odd prime");

    // Largest precision with p^K < 2^100 bounds the detectable det valuation.
    int max_prec = 0;
    u128 pk = 1;
    while (pk * static_cast<u128>(p) < (u128{1} << 100)) {
        pk *= static_cast<u128>(p);
        ++max_prec;
    }
    const ModRing wide(pk);
    const int det_val = valuation_mod(det_mod(wide, reduce_matrix(wide, g)), p, max_prec);
    if (det_val >= max_prec) throw DomainError("jordan_odd: singular matrix (or det valuation too large)");

    // Diagonal entries of the splitting have valuation <= v_p(det), so working modulo
    // p^(v_p(det)+1) determines every scale and every unit modulo p.
    const int prec = det_val + 1;
    u128 modulus = 1;
    for (int i = 0; i < prec; ++i) modulus *= static_cast<u128>(p);
    const ModRing R(modulus);
    ModMatrix a = reduce_matrix(R, g);

    std::vector<int> active{0, 1, 2};
    std::vector<JordanPiece> pieces;
    auto val = [&](int i, int j) { return valuation_mod(a[i][j], p, prec); };

    while (!active.empty()) {
        int e = prec;
        for (int i : active)
            for (int j : active) e = std::min(e, val(i, j));
        if (e >= prec) throw std::logic_error("jordan_odd: degenerate block under nonzero determinant");
        int k = -1;
        for (int i : active) {
            if (k < 0 && val(i, i) == e) k = i;
        }
        if (k < 0) {
            // Minimum sits off the diagonal: replace e_i by e_i + e_j. For odd p the
            // new diagonal entry g_ii + 2 g_ij + g_jj has valuation exactly e.
            for (int i : active) {
                for (int j : active) {
                    if (k < 0 && i != j && val(i, j) == e) {
                        for (int m = 0; m < 3; ++m) a[i][m] = R.add(a[i][m], a[j][m]);
                        for (int m = 0; m < 3; ++m) a[m][i] = R.add(a[m][i], a[m][j]);
                        k = i;
                    }
                }
            }
        }
        u128 pe = 1;
        for (int t = 0; t < e; ++t) pe *= static_cast<u128>(p);
        const u128 unit = a[k][k] / pe;
        const u128 unit_inv = R.inverse(unit % modulus);
        for (int l : active) {
            if (l == k) continue;
            const u128 f = R.mul(a[l][k] / pe, unit_inv);
            for (int m = 0; m < 3; ++m) a[l][m] = R.sub(a[l][m], R.mul(f, a[k][m]));
            for (int m = 0; m < 3; ++m) a[m][l] = R.sub(a[m][l], R.mul(f, a[m][k]));
        }
        pieces.push_back(JordanPiece{e, legendre(static_cast<i128>(unit % static_cast<u128>(p)), p)});
        active.erase(std::find(active.begin(), active.end(), k));
    }
    return jordan_from_pieces(p, std::move(pieces));
}

std::array<i128, 3> m2_diagonal(const FormParams& p) {
    if (p.r < 1) throw DomainError("m2_diagonal: only defined for r >= 1");
    const i128 tail = static_cast<i128>(p.a) + (static_cast<i128>(p.c) << p.s);
    const i128 eps = p.eps;
    return {eps, (eps * p.b * tail) << (p.r + 2), (static_cast<i128>(p.a) * p.c * tail) << (p.s + 2)};
}

std::string to_string(EvenBinary b) { return b == EvenBinary::A ? "A(2 1;1 2)" : "H(0 1;1 0)"; }

EvenBinary m2_r0(const FormParams& p) {
    if (p.r != 0 || p.s != 0) throw DomainError("m2_r0: requires r = s = 0");
    // Two of three odd numbers always agree mod 4; after moving that pair into the
    // (b, c) slots the plane is A exactly when all three agree.
    const bool all_agree = (p.a % 4 == p.b % 4) && (p.b % 4 == p.c % 4);
    return all_agree ? EvenBinary::A : EvenBinary::H;
}

BinaryValueSet binary_even_values(int rho) {
    if (rho == 0) return BinaryValueSet::AllOf2Z2;
    if (rho == 2) return BinaryValueSet::ZeroOrOddValuation;
    throw DomainError("binary_even_values: rho must be 0 or 2");
}

bool contains(BinaryValueSet set, i128 x) {
    if (x == 0) return true;
    if (set == BinaryValueSet::AllOf2Z2) return x % 2 == 0;
    return padic_valuation(2, x) % 2 == 1;
}

}  // namespace pentaform
