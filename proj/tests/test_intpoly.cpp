#include <doctest.h>

#include <random>
#include <set>

#include "scenic/forge.hpp"
#include "scenic/intpoly.hpp"

using namespace scenic;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int max_deg, long coeff_bound) {
    int d = static_cast<int>(uniform_below(rng, static_cast<uint64_t>(max_deg) + 1));
    std::vector<Int> cs(static_cast<size_t>(d) + 1);
    for (Int& c : cs)
        c = static_cast<long>(uniform_below(rng, 2 * static_cast<uint64_t>(coeff_bound) + 1)) -
            coeff_bound;
    return IntPoly(std::move(cs));
}

} // namespace

TEST_CASE("csv parsing and formatting") {
    IntPoly f = IntPoly::from_csv("133,65,26,85,15,30,24,-10,1");
    CHECK(f == paper_example());
    CHECK(f.to_csv() == "133,65,26,85,15,30,24,-10,1");
    CHECK(IntPoly::from_csv(" 1 , +2 ,\t-3 ") == IntPoly({1, 2, -3}));
    CHECK_THROWS_AS(IntPoly::from_csv("1,,2"), Error);
    CHECK_THROWS_AS(IntPoly::from_csv("1,x"), Error);
    CHECK_THROWS_AS(IntPoly::from_csv(""), Error);
    // trailing zeros normalize away
    CHECK(IntPoly({1, 2, 0, 0}).degree() == 1);
    CHECK(IntPoly({0, 0, 0}).is_zero());
    CHECK(IntPoly().degree() == -1);
}

TEST_CASE("evaluation") {
    IntPoly f = paper_example();
    CHECK(eval(f, Rat(0)) == 133);
    CHECK(eval(f, Rat(1)) == 369); // sum of the printed coefficients
    CHECK(eval(IntPoly({1, 0, 1}), Rat(0)) == 1);
    CHECK(eval(IntPoly({1, 0, 1}), Rat(1, 2)) == Rat(5, 4));
    CHECK(eval(f, Int(2)) == eval(f, Rat(2)).get_num());
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        IntPoly f = random_poly(rng, 6, 20);
        IntPoly g = random_poly(rng, 6, 20);
        long num = static_cast<long>(uniform_below(rng, 41)) - 20;
        long den = 1 + static_cast<long>(uniform_below(rng, 7));
        Rat x(num, den);
        x.canonicalize();
        CHECK(eval(f * g, x) == eval(f, x) * eval(g, x));
        CHECK(eval(f + g, x) == eval(f, x) + eval(g, x));
    }
}

TEST_CASE("squarefree check") {
    CHECK_FALSE(squarefree_part_check(IntPoly({1, -2, 1}))); // (x-1)^2
    CHECK(squarefree_part_check(IntPoly({1, 0, 1})));
    CHECK(squarefree_part_check(paper_example()));
    CHECK_FALSE(squarefree_part_check(IntPoly()));
    CHECK(squarefree_part_check(IntPoly({5})));
    // (x^2+1)^2 (x-3)
    IntPoly g = IntPoly({1, 0, 1}) * IntPoly({1, 0, 1}) * IntPoly({-3, 1});
    CHECK_FALSE(squarefree_part_check(g));
}

TEST_CASE("sturm root counting") {
    CHECK(sturm_real_root_count(IntPoly({1, 0, 1})) == 0);  // x^2+1
    CHECK(sturm_real_root_count(IntPoly({-1, 0, 1})) == 2); // x^2-1
    CHECK(sturm_real_root_count(paper_example()) == 0);
    CHECK(sturm_real_root_count(IntPoly({7})) == 0);
    CHECK(sturm_real_root_count(IntPoly({-5, 2})) == 1);
    CHECK_THROWS_AS(sturm_real_root_count(IntPoly({1, -2, 1})), Error);
    CHECK_THROWS_AS(sturm_real_root_count(IntPoly()), Error);
}

TEST_CASE("sturm counts planted integer roots") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 60; ++t) {
        int m = 1 + static_cast<int>(uniform_below(rng, 6));
        std::set<long> roots;
        while (static_cast<int>(roots.size()) < m)
            roots.insert(static_cast<long>(uniform_below(rng, 101)) - 50);
        IntPoly f({1});
        for (long r : roots) f = f * IntPoly({-r, 1});
        // optionally pad with a rootless quadratic
        if (uniform_below(rng, 2) == 0 && f.degree() <= 8)
            f = f * IntPoly({static_cast<long>(1 + uniform_below(rng, 50)), 0, 1});
        CHECK(sturm_real_root_count(f) == m);
    }
}

TEST_CASE("cauchy bound") {
    CHECK(cauchy_bound(IntPoly({1, 0, 1})) == 2);
    CHECK(cauchy_bound(IntPoly({-1, 0, 1})) == 2);
    CHECK(cauchy_bound(paper_example()) == 134);
    CHECK_THROWS_AS(cauchy_bound(Int(2) * paper_example()), Error);
    CHECK_THROWS_AS(cauchy_bound(IntPoly()), Error);
}

TEST_CASE("discriminant") {
    CHECK(discriminant(IntPoly({1, 0, 1})) == -4);
    CHECK(discriminant(IntPoly({1, -2, 1})) == 0);
    CHECK(discriminant(IntPoly({1, 1, 0, 1})) == -31); // matches -4p^3 - 27q^2
    // quadratic x^2 + bx + c and cubic x^3 + px + q against the closed forms
    for (long b = -3; b <= 3; ++b)
        for (long c = -3; c <= 3; ++c)
            CHECK(discriminant(IntPoly({c, b, 1})) == b * b - 4 * c);
    for (long p = -3; p <= 3; ++p)
        for (long q = -3; q <= 3; ++q)
            CHECK(discriminant(IntPoly({q, p, 0, 1})) == -4 * p * p * p - 27 * q * q);
    // independently computed value for the degree-8 example
    CHECK(discriminant(paper_example()) == Int("297614270415876089221326373"));
}

TEST_CASE("discriminant vanishes exactly on squarefull polynomials") {
    std::mt19937_64 rng(37);
    int squarefull_seen = 0;
    for (int t = 0; t < 1000; ++t) {
        IntPoly f = random_poly(rng, 6, 8);
        if (uniform_below(rng, 4) == 0) {
            IntPoly g = random_poly(rng, 2, 5);
            if (g.degree() >= 1) f = f * g * g; // plant a repeated factor
        }
        if (f.degree() < 1) continue;
        bool sf = squarefree_part_check(f);
        if (!sf) ++squarefull_seen;
        CHECK((discriminant(f) == 0) == !sf);
    }
    CHECK(squarefull_seen > 50); // both branches exercised
}

TEST_CASE("primitive gcd and exact division") {
    IntPoly a({-1, 0, 1});             // (x-1)(x+1)
    IntPoly b = IntPoly({-1, 1}) * IntPoly({2, 1});
    CHECK(primitive_gcd(a, b) == IntPoly({-1, 1}));
    IntPoly prod = a * b;
    CHECK(exact_divide(prod, a) == b);
    CHECK_THROWS_AS(exact_divide(a, IntPoly({0, 0, 0, 1})), std::invalid_argument);
}
