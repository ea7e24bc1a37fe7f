#ifndef SCENIC_FORGE_HPP
#define SCENIC_FORGE_HPP

#include <random>
#include <utility>

#include "scenic/galois.hpp"
#include "scenic/intpoly.hpp"

namespace scenic {

/* Output of the construction pipeline. The defining identity
 * f = -15*f2 + 10*f3 + 6*f5 + 30*k holds exactly, and the certificate is
 * always scenic. */
struct ForgeResult {
    IntPoly f, f2, f3, f5;
    Int k;
    ScenicCertificate certificate;
    uint64_t seed = 0;
};

/* -15*f2 + 10*f3 + 6*f5 + 30*k for monic inputs of equal degree. The result
 * is monic of the same degree and congruent to f2, f3, f5 mod 2, 3, 5.
 * Arbitrary integer lifts are accepted. Throws errc::degree_mismatch /
 * errc::not_monic. */
IntPoly combine(const IntPoly& f2, const IntPoly& f3, const IntPoly& f5, const Int& k);

/* Canonical lift of (x - c) * g with c random in F_3 and g a random monic
 * irreducible of degree d-1; mod-3 shape {(1,1),(d-1,1)}. Requires d >= 4. */
IntPoly make_f3(int d, std::mt19937_64& rng);

/* The (o1, o2) rule for the two odd factor degrees mod 5: equal halves
 * (d-2)/2 when that is odd, else (1, d-3). Requires even d >= 6. */
std::pair<int, int> odd_split(int d);

/* Canonical lift of q * g1 * g2 with q a random irreducible quadratic mod 5
 * and g1, g2 irreducible of the odd_split degrees (distinct when the
 * degrees coincide); the mod-5 image is squarefree. Requires even d >= 6. */
IntPoly make_f5(int d, std::mt19937_64& rng);

Int default_k_max();

/* Smallest k >= 0 such that combine(f2, f3, f5, k) has no real roots.
 * Root-freeness is upward-closed in k (adding 30 pointwise preserves
 * positivity), so the minimum is located by exponential bracketing plus
 * bisection, each step decided by an exact Sturm count. Throws
 * errc::k_max_exceeded when no k <= k_max works. */
Int minimal_k(const IntPoly& f2, const IntPoly& f3, const IntPoly& f5,
              const Int& k_max = default_k_max());

/* Full pipeline for even d >= 6: f2 = canonical lift of a random
 * irreducible mod 2, f3/f5 as above, k minimal. Deterministic given
 * (d, seed). Throws errc::degree_invalid, propagates errc::k_max_exceeded. */
ForgeResult forge(int d, uint64_t seed, const Int& k_max = default_k_max());

/* x^8 - 10x^7 + 24x^6 + 30x^5 + 15x^4 + 85x^3 + 26x^2 + 65x + 133 */
IntPoly paper_example();

/* The printed lifts reproducing paper_example() via combine(..., 4). */
IntPoly paper_lift_f2();
IntPoly paper_lift_f3();
IntPoly paper_lift_f5();

} // namespace scenic

#endif
