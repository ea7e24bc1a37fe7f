#include "scenic/forge.hpp"

#include <stdexcept>

namespace scenic {

IntPoly combine(const IntPoly& f2, const IntPoly& f3, const IntPoly& f5, const Int& k) {
    if (f2.degree() != f3.degree() || f2.degree() != f5.degree())
        raise(errc::degree_mismatch, "combine requires equal degrees");
    if (!f2.is_monic() || !f3.is_monic() || !f5.is_monic())
        raise(errc::not_monic, "combine requires monic inputs");
    IntPoly f = Int(-15) * f2 + Int(10) * f3 + Int(6) * f5;
    return f + IntPoly({Int(30) * k});
}

IntPoly make_f3(int d, std::mt19937_64& rng) {
    if (d < 4) throw std::invalid_argument("make_f3 requires degree >= 4");
    uint64_t c = uniform_below(rng, 3);
    ModPoly linear = ModPoly::from_prime(3, {(3 - c) % 3, 1}); // x - c mod 3
    ModPoly g = random_irreducible(3, d - 1, rng);
    return lift_canonical(mod_mul(linear, g));
}

std::pair<int, int> odd_split(int d) {
    if (d < 6 || d % 2 != 0) raise(errc::degree_invalid, "odd split requires even degree >= 6");
    int half = (d - 2) / 2;
    return half % 2 == 1 ? std::pair{half, half} : std::pair{1, d - 3};
}

IntPoly make_f5(int d, std::mt19937_64& rng) {
    auto [o1, o2] = odd_split(d);
    ModPoly q = random_irreducible(5, 2, rng);
    ModPoly g1 = random_irreducible(5, o1, rng);
    ModPoly g2 = random_irreducible(5, o2, rng);
    while (o1 == o2 && g2 == g1) g2 = random_irreducible(5, o2, rng);
    return lift_canonical(mod_mul(q, mod_mul(g1, g2)));
}

Int default_k_max() {
    // 10^40: effectively unbounded, but the search stays bounded
    static const Int k = [] {
        Int v;
        mpz_ui_pow_ui(v.get_mpz_t(), 10, 40);
        return v;
    }();
    return k;
}

Int minimal_k(const IntPoly& f2, const IntPoly& f3, const IntPoly& f5, const Int& k_max) {
    if (f2.degree() % 2 != 0) raise(errc::degree_invalid, "minimal_k requires even degree");
    IntPoly base = combine(f2, f3, f5, 0);
    auto root_free = [&](const Int& k) {
        return sturm_real_root_count(base + IntPoly({Int(30) * k})) == 0;
    };
    if (k_max < 0) raise(errc::k_max_exceeded, "k_max is negative");
    if (root_free(0)) return 0;

    // exponential bracket, then bisection; valid since adding 30 pointwise
    // preserves positivity, so root-freeness is upward-closed in k
    Int lo = 0, hi = 1;
    if (hi > k_max) raise(errc::k_max_exceeded, "no root-free shift up to k_max");
    while (!root_free(hi)) {
        lo = hi;
        if (hi == k_max) raise(errc::k_max_exceeded, "no root-free shift up to k_max");
        hi *= 2;
        if (hi > k_max) hi = k_max;
    }
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (root_free(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

ForgeResult forge(int d, uint64_t seed, const Int& k_max) {
    if (d < 6 || d % 2 != 0)
        raise(errc::degree_invalid, "forge requires an even degree >= 6, got " + std::to_string(d));
    std::mt19937_64 rng(seed);
    ForgeResult r;
    r.seed = seed;
    r.f2 = lift_canonical(random_irreducible(2, d, rng));
    r.f3 = make_f3(d, rng);
    r.f5 = make_f5(d, rng);
    r.k = minimal_k(r.f2, r.f3, r.f5, k_max);
    r.f = combine(r.f2, r.f3, r.f5, r.k);
    r.certificate = scenic_check(r.f);
    if (!r.certificate.scenic)
        throw std::logic_error("forged polynomial failed its own certificate");
    return r;
}

IntPoly paper_example() {
    return IntPoly({133, 65, 26, 85, 15, 30, 24, -10, 1});
}

IntPoly paper_lift_f2() { return IntPoly({1, 1, 0, 1, 1, 0, 0, 0, 1}); }

// (x - 1)(x^7 + x^2 + 2)
IntPoly paper_lift_f3() { return IntPoly({-2, 2, -1, 1, 0, 0, 0, -1, 1}); }

// (x^2 + 2)(x^3 + x + 1)(x^3 + x + 4)
IntPoly paper_lift_f5() { return IntPoly({8, 10, 6, 15, 5, 5, 4, 0, 1}); }

} // namespace scenic
