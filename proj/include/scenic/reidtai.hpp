#ifndef SCENIC_REIDTAI_HPP
#define SCENIC_REIDTAI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "scenic/intpoly.hpp"

namespace scenic {

/* Element of a finite abelian group acting diagonally on C^m as
 * diag(exp(2*pi*i*a_j / r)); rotations a_j in [0, r). */
struct GroupElement {
    int64_t order = 1;
    std::vector<int64_t> rotations;

    bool is_identity() const;
    /* nonidentity element fixing a hyperplane: exactly one nonzero rotation */
    bool is_quasi_reflection() const;
    bool operator==(const GroupElement& o) const = default;
};

/* Reid-Tai age: sum a_j / r as an exact rational. */
Rat age(const GroupElement& g);

/* Finite abelian diagonal action given by generators of equal dimension. */
struct DiagonalAction {
    std::vector<GroupElement> generators;
};

/* Closure under composition (rotations add mod the lcm of the orders),
 * identity excluded; all elements normalized to the common order. */
std::vector<GroupElement> closure_elements(const DiagonalAction& action);

enum class SingClass { terminal, canonical_not_terminal, not_canonical };

const char* sing_class_name(SingClass c);

struct ElementReport {
    GroupElement g;
    Rat age;
    bool quasi_reflection = false;
};

/* terminal iff age > 1 for every nonidentity element; canonical-not-terminal
 * iff the minimum age is exactly 1; not-canonical iff some age < 1. */
struct Classification {
    SingClass kind = SingClass::terminal;
    std::vector<ElementReport> elements;
};

/* Throws errc::quasi_reflection_present when any closure element is a
 * quasi-reflection; ages would be misreported after the implied coordinate
 * change, so classification is refused rather than renormalized. */
Classification classify(const DiagonalAction& action);

enum class ModelVariant { base, total };

/* The three canned order-2 local models in dimension 2n+1 (base) or 2n+2
 * (total):
 *   (i)   one generator negating n+1 (resp. n+2) coordinates,
 *   (ii)  one generator negating 2n coordinates,
 *   (iii) two generators (1^n 0^n 1 [1]) and (0^n 1^n 1 [1]) whose product
 *         negates 2n coordinates. */
std::vector<DiagonalAction> local_models(int n, ModelVariant variant);

} // namespace scenic

#endif
