#include "pentaform/spinor.hpp"

#include <stdexcept>

#include "pentaform/local.hpp"

namespace pentaform {

namespace {

i64 odd_mod8(i128 w) {
    i64 r = static_cast<i64>(w % 8);
    if (r < 0) r += 8;
    if (r % 2 == 0) throw DomainError("expected an odd 2-adic unit");
    return r;
}

SquareClass class_2(int m, i64 unit) { return SquareClass::of(2, (static_cast<i128>(1) << m) * unit); }

SquareClassSet unit_classes(i64 p) {
    SquareClassSet s(p);
    for (const auto& c : SquareClassSet::full(p).elements()) {
        if (c.val_parity() == 0) s.insert(c);
    }
    return s;
}

ContainmentVerdict decide(SquareClassSet group, SquareClassSet target, std::string route) {
    ContainmentVerdict v;
    v.status = group.is_subset_of(target) ? Containment::Contained : Containment::NotContained;
    v.computed_group = group;
    v.target = target;
    v.route = std::move(route);
    return v;
}

ContainmentVerdict undetermined(Containment status, std::optional<SquareClassSet> target, std::string route) {
    ContainmentVerdict v;
    v.status = status;
    v.target = std::move(target);
    v.route = std::move(route);
    return v;
}

}  // namespace

std::string to_string(Containment c) {
    switch (c) {
        case Containment::Contained: return "contained";
        case Containment::NotContained: return "not_contained";
        case Containment::Unsupported: return "unsupported";
    }
    return "unknown";
}

std::string to_string(SpinorOutcome o) {
    switch (o) {
        case SpinorOutcome::IsException: return "is_exception";
        case SpinorOutcome::NotException: return "not_exception";
        case SpinorOutcome::Unsupported: return "unsupported";
    }
    return "unknown";
}

std::optional<SquareClassSet> theta_binary_2adic(int m, i128 w) {
    if (m < 0) throw DomainError("theta_binary_2adic: negative exponent");
    const i64 u = odd_mod8(w);
    if (m == 0) return std::nullopt;
    if (m == 1 || m == 3) return hilbert_kernel(2, -2 * u);
    if (m == 2) {
        SquareClassSet out(2);
        for (const auto& c : hilbert_kernel(2, -u).elements()) {
            if (c.val_parity() == 0) out.insert(c);
        }
        return out;
    }
    if (m == 4) return SquareClassSet::of(2, {1, 5, u, 5 * u});
    SquareClassSet out = SquareClassSet::identity(2);
    out.insert(class_2(m, u));
    return out;
}

int exceptional_field(const FormParams& params) {
    int D = 1;
    if ((params.r + params.s) % 2 == 1) D *= 2;
    if (padic_valuation(3, params.abc()) % 2 == 1) D *= 3;
    return D;
}

ContainmentVerdict theta_M2_contained(const FormParams& params, int D) {
    const auto target = norm_group(2, D);
    const int r = params.r;
    const int s = params.s;
    const i64 a = params.a % 8, b = params.b % 8, c = params.c % 8;

    if (r == 0 && s > 0) return undetermined(Containment::Unsupported, target, "r=0<s");

    if (r == 0 && s == 0) {
        // <eps> + 4 eps K: the group is Q_2^x when K = H and all unit classes times
        // squares when K = A; neither sits in a norm group of index 2.
        return undetermined(Containment::NotContained, target, "r=s=0");
    }

    const i64 eps8 = odd_mod8(params.eps);
    const i64 abce = odd_mod8(static_cast<i128>(a) * b * c * eps8);

    if (r == s) {
        if (D == 3) {
            // Contained iff every component of an orthogonal splitting has even order.
            const bool ok = r % 2 == 0 && abce % 4 == 3;
            return undetermined(ok ? Containment::Contained : Containment::NotContained, target, "r=s,unramified");
        }
        if (D == 1) {
            const i64 w = odd_mod8(static_cast<i128>(b) * (a + (static_cast<i128>(1) << r) * c));
            const bool binary_ok =
                r >= 2 && abce % 4 == 1 &&
                hilbert_symbol((static_cast<i128>(1) << (r + 2)) * w, -static_cast<i128>(abce), 2) == 1;
            if (!binary_ok) return undetermined(Containment::NotContained, target, "r=s,D=1,generic");
            return decide(hilbert_kernel(2, -static_cast<i128>(abce)), target, "r=s,D=1,kernel");
        }
        return undetermined(Containment::Unsupported, target, "r=s,D even");
    }

    // 0 < r < s: M_2 = <eps> + 2^(r+2) U with U = <w_U, 2^(s-r) w_W> up to unit squares.
    const bool gap = (r == 2 && (s - r == 1 || s - r == 3)) || (r == 1 && s == 2);
    if (gap) return decide(SquareClassSet::full(2), target, "r<s,gap");

    const i64 a_plus = odd_mod8(a + (static_cast<i128>(1) << s) * c);
    const i64 wU = odd_mod8(static_cast<i128>(b) * a_plus);
    const i64 wW = abce;  // abc eps (a + 2^s c)^2 up to a square
    const auto thU = theta_binary_2adic(r + 2, wU);
    const auto thW = theta_binary_2adic(s - r, wW);
    if (!thU || !thW) return undetermined(Containment::Unsupported, target, "r<s,degenerate");

    std::vector<SquareClass> gens = thU->elements();
    for (const auto& g : thW->translate(class_2(r + 2, wU)).elements()) gens.push_back(g);
    return decide(subgroup_generate(2, gens), target, "r<s,binary");
}

SquareClassSet theta_odd_group(const JordanSplitting& j) {
    const i64 p = j.p;
    // Possible norms of each basis vector of a diagonalization.
    std::vector<SquareClassSet> vectors;
    for (const auto& comp : j.components) {
        const auto scale = SquareClass::of(p, comp.scale_exp % 2 == 0 ? 1 : p);
        if (comp.rank == 1) {
            SquareClassSet one(p);
            one.insert(scale * SquareClass::from_index(p, *comp.unit_class == 1 ? 0 : 1));
            vectors.push_back(one);
        } else {
            const auto units = unit_classes(p).translate(scale);
            for (int k = 0; k < comp.rank; ++k) vectors.push_back(units);
        }
    }
    std::vector<SquareClass> gens;
    for (std::size_t x = 0; x < vectors.size(); ++x) {
        for (std::size_t y = x + 1; y < vectors.size(); ++y) {
            for (const auto& u : vectors[x].elements()) {
                for (const auto& v : vectors[y].elements()) gens.push_back(u * v);
            }
        }
    }
    return subgroup_generate(p, gens);
}

ContainmentVerdict theta_M3_contained(const JordanSplitting& j, int D) {
    if (j.p != 3) throw DomainError("theta_M3_contained: splitting must be 3-adic");
    const auto group = theta_odd_group(j);
    if (padic_valuation(3, D) % 2 == 1) return decide(group, norm_group(3, D), "ramified");
    // Unramified or split: the genus and spinor genus can only differ when the group is
    // confined to Z_3^x Q_3^x2.
    return decide(group, unit_classes(3), "unramified");
}

SpinorReport spinor_exception_check(const FormParams& params) {
    if (no_local_obstruction(params).obstructed())
        throw std::invalid_argument("spinor_exception_check: local obstruction present");
    SpinorReport rep;
    rep.D = exceptional_field(params);
    if (params.r == 0 && params.s > 0) {
        rep.outcome = SpinorOutcome::Unsupported;
        return rep;
    }
    for (auto [p, e] : abc_factorization(params)) {
        if (p >= 5 && e % 2 == 1 && legendre(-rep.D, p) != 1) rep.failing_primes.push_back(p);
    }
    rep.at3 = theta_M3_contained(jordan_odd(3, gram_M(params)), rep.D);
    rep.at2 = theta_M2_contained(params, rep.D);
    if (rep.at2.status == Containment::Unsupported) {
        rep.outcome = SpinorOutcome::Unsupported;
        return rep;
    }
    const bool all = rep.failing_primes.empty() && rep.at3.status == Containment::Contained &&
                     rep.at2.status == Containment::Contained;
    rep.outcome = all ? SpinorOutcome::IsException : SpinorOutcome::NotException;
    return rep;
}

}  // namespace pentaform
