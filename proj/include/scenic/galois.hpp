#ifndef SCENIC_GALOIS_HPP
#define SCENIC_GALOIS_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "scenic/ffpoly.hpp"
#include "scenic/intpoly.hpp"

namespace scenic {

/* Factorization-shape certificate for the mod-2/3/5 criterion forcing the
 * full symmetric group:
 *   (1) irreducible mod 2,
 *   (2) linear times irreducible of degree d-1 mod 3,
 *   (3) one quadratic and one or two odd-degree irreducible factors mod 5,
 * all three images squarefree. */
struct VdWCertificate {
    int degree = 0;
    FactorShape shape2, shape3, shape5;
    bool cond1 = false, cond2 = false, cond3 = false;
    bool pass = false;
};

/* Full audit trail for the scenic-torus requirements on a characteristic
 * polynomial: monic, even degree, symmetric Galois group per the
 * certificate, squarefree, and no real roots. */
struct ScenicCertificate {
    VdWCertificate vdw;
    bool vdw_applicable = false; // false when f is non-monic or deg < 4
    bool monic = false;
    bool even_degree = false;
    int real_root_count = 0; // distinct real roots (of the squarefree part)
    bool squarefree = false;
    bool scenic = false;
};

/* Frobenius cycle-type statistics over all primes <= prime_bound not
 * dividing the discriminant. Bucket keys are partitions of deg f, parts
 * descending. */
struct CycleHistogram {
    uint64_t prime_bound = 0;
    uint64_t primes_used = 0;
    std::vector<uint64_t> ramified;
    std::map<std::vector<int>, uint64_t> buckets;
    Rat irreducible_fraction;
};

/* Shapes mod 2, 3, 5 via distinct-degree factorization, assembled into the
 * certificate. Throws errc::not_monic / errc::degree_too_small (d < 4). */
VdWCertificate check_vdw(const IntPoly& f);

/* Never throws; failures are recorded in the certificate. */
ScenicCertificate scenic_check(const IntPoly& f);

/* Requires monic squarefree f. workers > 1 splits the prime range into
 * contiguous chunks processed concurrently; the merge is a commutative
 * histogram sum, so the result does not depend on the worker count. */
CycleHistogram frobenius_scan(const IntPoly& f, uint64_t prime_bound, int workers = 1);

/* Permutations of {0..d-1} as image vectors. */
using Perm = std::vector<uint8_t>;

Perm perm_compose(const Perm& a, const Perm& b); // (a*b)(i) = a(b(i))
Perm perm_power(Perm a, int e);
Perm cycle_perm(int d, int start, int len); // (start start+1 ... start+len-1)

/* Order of the subgroup generated by gens, by breadth-first closure under
 * composition. Intended for desk-scale groups (|G| <= cap). */
uint64_t closure_order(const std::vector<Perm>& gens, uint64_t cap = 1u << 20);

/* Brute-force check of the group-theoretic implication behind the
 * certificate: a d-cycle, a (d-1)-cycle and the transposition obtained as
 * the lcm(o1,o2)-th power of an element of cycle type (2, o1, o2) generate
 * the full symmetric group. Returns (order == d!, order). d <= 8 only
 * (errc::degree_too_large); o1, o2 must be odd with o1 + o2 = d - 2. */
std::pair<bool, uint64_t> symmetric_closure_oracle(int d, std::pair<int, int> odd_split);

uint64_t factorial(int n);

} // namespace scenic

#endif
