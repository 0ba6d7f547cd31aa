#include <doctest.h>

#include <random>

#include "pentaform/classifier.hpp"
#include "pentaform/local.hpp"
#include "pentaform/spinor.hpp"

using namespace pentaform;

namespace {

// theta(O+(<1, 2^m w>)) from the symmetries of the lattice: tau_v lies in O(L) iff
// 2B(v, e_i)/Q(v) is integral for both basis vectors. The group is generated by
// products of two such Q(v).
SquareClassSet brute_theta_binary(int m, i64 w) {
    std::vector<SquareClass> norms;
    SquareClassSet seen(2);
    const i64 bound = 40;
    for (i64 x = -bound; x <= bound; ++x) {
        for (i64 y = -bound; y <= bound; ++y) {
            const i128 q = static_cast<i128>(x) * x + (static_cast<i128>(w) << m) * y * y;
            if (q == 0) continue;
            const int vq = padic_valuation(2, q);
            const bool ok1 = x == 0 || padic_valuation(2, 2 * x) >= vq;
            const bool ok2 = y == 0 || padic_valuation(2, (static_cast<i128>(w) << (m + 1)) * y) >= vq;
            if (!ok1 || !ok2) continue;
            const auto c = SquareClass::of(2, q);
            if (!seen.contains(c)) {
                seen.insert(c);
                norms.push_back(c);
            }
        }
    }
    std::vector<SquareClass> gens;
    for (const auto& u : norms) {
        for (const auto& v : norms) gens.push_back(u * v);
    }
    return subgroup_generate(2, gens);
}

}  // namespace

TEST_CASE("binary 2-adic table matches the symmetry search") {
    for (int m = 1; m <= 9; ++m) {
        for (i64 w : {1, 3, 5, 7}) {
            INFO("m=" << m << " w=" << w);
            const auto t = theta_binary_2adic(m, w);
            REQUIRE(t.has_value());
            CHECK(*t == brute_theta_binary(m, w));
        }
    }
}

TEST_CASE("binary 2-adic table: shape") {
    CHECK_FALSE(theta_binary_2adic(0, 1).has_value());
    CHECK(*theta_binary_2adic(4, 9) == SquareClassSet::of(2, {1, 5}));
    CHECK(*theta_binary_2adic(5, 3) == SquareClassSet::of(2, {1, 2 * 3}));
    CHECK(*theta_binary_2adic(1, 1) == hilbert_kernel(2, -2));
    for (int m = 1; m <= 12; ++m) {
        for (i64 w : {1, 3, 5, 7, -1, 11}) {
            const auto t = theta_binary_2adic(m, w);
            CHECK(t->is_subgroup());
            CHECK(t->contains(1));
            CHECK(*t == *theta_binary_2adic(m, w + 8));
        }
    }
}

TEST_CASE("M_2 containment examples") {
    CHECK(theta_M2_contained(make_params(5, 9, 9, 2, 2), 1).status == Containment::Contained);
    CHECK(theta_M2_contained(make_params(1, 1, 1, 1, 2), 2).status == Containment::NotContained);
    CHECK(theta_M2_contained(make_params(1, 3, 7, 0, 0), 3).status == Containment::NotContained);
    const auto v = theta_M2_contained(make_params(5, 9, 9, 2, 2), 1);
    REQUIRE(v.computed_group.has_value());
    CHECK(v.computed_group->is_subset_of(*v.target));
}

TEST_CASE("ContainmentVerdict: status agrees with the computed group") {
    for (i64 a = 1; a <= 15; a += 2) {
        for (i64 b = 1; b <= 15; b += 2) {
            for (int r = 1; r <= 6; ++r) {
                for (int s = r; s <= 8; ++s) {
                    FormParams p;
                    try {
                        p = make_params(a, b, 1, r, s);
                    } catch (const ParamError&) {
                        continue;
                    }
                    for (int D : {1, 2, 3, 6}) {
                        const auto v = theta_M2_contained(p, D);
                        if (!v.computed_group) continue;
                        CHECK(v.computed_group->is_subgroup());
                        CHECK((v.status == Containment::Contained) == v.computed_group->is_subset_of(*v.target));
                    }
                }
            }
        }
    }
}

TEST_CASE("M_3 containment examples") {
    const auto even = jordan_from_pieces(3, {{0, 1}, {4, 1}, {4, -1}});
    CHECK(theta_M3_contained(even, 1).status == Containment::Contained);
    for (int i = 1; i <= 4; ++i) {
        for (int j = i + 1; j <= 6; ++j) {
            for (int u : {1, -1}) {
                const auto same = jordan_from_pieces(3, {{0, u}, {i, u}, {j, u}});
                CHECK(theta_M3_contained(same, 3).status == Containment::Contained);
            }
        }
    }
    const auto bad = jordan_from_pieces(3, {{0, 1}, {1, -1}, {2, 1}});
    CHECK(theta_M3_contained(bad, 3).status == Containment::NotContained);
    CHECK(theta_odd_group(jordan_from_pieces(3, {{0, 1}, {0, 1}, {2, 1}})).size() >= 2);
}

TEST_CASE("unramified D at 3: contained iff every scale is even") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> sc(0, 7), un(0, 1);
    for (int t = 0; t < 2000; ++t) {
        std::vector<JordanPiece> pieces;
        // M always has a unimodular component: Q(v) = eps is prime to 3.
        pieces.push_back({0, un(rng) ? 1 : -1});
        for (int k = 0; k < 2; ++k) pieces.push_back({sc(rng), un(rng) ? 1 : -1});
        const auto j = jordan_from_pieces(3, pieces);
        bool all_even = true;
        for (const auto& c : j.components) all_even = all_even && c.scale_exp % 2 == 0;
        for (int D : {1, 2}) CHECK((theta_M3_contained(j, D).status == Containment::Contained) == all_even);
        // Without the unimodular piece only the common parity matters.
        std::vector<JordanPiece> shifted;
        for (const auto& q : pieces) shifted.push_back({q.scale_exp + 1, q.unit_class});
        const auto js = jordan_from_pieces(3, shifted);
        CHECK((theta_M3_contained(js, 1).status == Containment::Contained) == all_even);
    }
}

TEST_CASE("exceptional field") {
    CHECK(exceptional_field(make_params(5, 9, 9, 2, 2)) == 1);
    CHECK(exceptional_field(make_params(1, 3, 9, 2, 2)) == 3);
    CHECK(exceptional_field(make_params(1, 1, 1, 1, 2)) == 2);
    CHECK(exceptional_field(make_params(1, 3, 9, 3, 4)) == 6);
}

TEST_CASE("spinor_exception_check examples") {
    CHECK(spinor_exception_check(make_params(5, 9, 9, 2, 2)).outcome == SpinorOutcome::IsException);
    CHECK(spinor_exception_check(make_params(1, 1, 5, 0, 0)).outcome == SpinorOutcome::NotException);
    CHECK_THROWS_AS(spinor_exception_check(make_params(1, 5, 13, 0, 0)), std::invalid_argument);
}

TEST_CASE("spinor check agrees with conditions (i)-(iii) on the corpus") {
    std::size_t compared = 0;
    for (i64 a = 1; a <= 15; a += 2) {
        for (i64 b = 1; b <= 15; b += 2) {
            for (i64 c = 1; c <= 15; c += 2) {
                for (int r = 0; r <= 6; ++r) {
                    for (int s = r; s <= 6; ++s) {
                        if (r == 0 && s > 0) continue;
                        FormParams p;
                        try {
                            p = make_params(a, b, c, r, s);
                        } catch (const ParamError&) {
                            continue;
                        }
                        if (no_local_obstruction(p).obstructed()) continue;
                        const auto spin = spinor_exception_check(p);
                        if (spin.outcome == SpinorOutcome::Unsupported) continue;
                        const auto k = classify_case(p);
                        const bool conj = k != TheoremCase::D && condition_i(p, k) && condition_ii(p, k) &&
                                          condition_iii(p, k);
                        INFO(to_string(p));
                        CHECK(conj == (spin.outcome == SpinorOutcome::IsException));
                        ++compared;
                    }
                }
            }
        }
    }
    CHECK(compared > 2000);
}
