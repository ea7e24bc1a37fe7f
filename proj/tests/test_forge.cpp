#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "scenic/forge.hpp"

using namespace scenic;

TEST_CASE("combine reproduces the printed example exactly") {
    IntPoly f = combine(paper_lift_f2(), paper_lift_f3(), paper_lift_f5(), 4);
    CHECK(f == paper_example());
    CHECK(f.to_csv() == "133,65,26,85,15,30,24,-10,1");
}

TEST_CASE("combine congruences and shift") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 1000; ++t) {
        int d = 4 + 2 * static_cast<int>(uniform_below(rng, 3));
        IntPoly f2 = lift_canonical(random_irreducible(2, d, rng));
        IntPoly f3 = make_f3(d, rng);
        IntPoly f5 = d >= 6 ? make_f5(d, rng) : f3;
        long k = static_cast<long>(uniform_below(rng, 10));
        IntPoly f = combine(f2, f3, f5, k);
        CHECK(f.is_monic());
        CHECK(f.degree() == d);
        CHECK(reduce(f, 2) == reduce(f2, 2));
        CHECK(reduce(f, 3) == reduce(f3, 3));
        CHECK(reduce(f, 5) == reduce(f5, 5));
        IntPoly g = combine(f2, f3, f5, k + 1);
        CHECK(g - f == IntPoly({30}));
    }
}

TEST_CASE("combine rejects bad input") {
    CHECK_THROWS_AS(combine(IntPoly({1, 1}), paper_lift_f3(), paper_lift_f5(), 0), Error);
    CHECK_THROWS_AS(combine(Int(2) * paper_lift_f2(), paper_lift_f3(), paper_lift_f5(), 0), Error);
}

TEST_CASE("make_f3 shape") {
    std::mt19937_64 rng(2);
    for (int d : {4, 8, 11}) {
        IntPoly f3 = make_f3(d, rng);
        CHECK(f3.is_monic());
        CHECK(f3.degree() == d);
        FactorShape s = ddf(reduce(f3, 3));
        CHECK(s.squarefree);
        CHECK(s.pairs == std::vector<std::pair<int, int>>{{1, 1}, {d - 1, 1}});
    }
}

TEST_CASE("odd split rule") {
    CHECK(odd_split(8) == std::pair{3, 3});
    CHECK(odd_split(10) == std::pair{1, 7});
    CHECK(odd_split(12) == std::pair{5, 5});
    CHECK(odd_split(6) == std::pair{1, 3});
    CHECK(odd_split(16) == std::pair{7, 7});
    CHECK(odd_split(20) == std::pair{9, 9});
    CHECK_THROWS_AS(odd_split(7), Error);
    CHECK_THROWS_AS(odd_split(4), Error);
}

TEST_CASE("make_f5 shape") {
    std::mt19937_64 rng(3);
    for (int d : {6, 8, 10, 12}) {
        IntPoly f5 = make_f5(d, rng);
        CHECK(f5.is_monic());
        CHECK(f5.degree() == d);
        FactorShape s = ddf(reduce(f5, 5));
        CHECK(s.squarefree);
        auto [o1, o2] = odd_split(d);
        std::vector<std::pair<int, int>> want;
        if (o1 == 1)
            want = {{1, 1}, {2, 1}, {o2, 1}};
        else
            want = {{2, 1}, {o1, 2}};
        CHECK(s.pairs == want);
    }
}

TEST_CASE("minimal k on a quadratic toy") {
    // combination is x^2 - 15 + 30k, root-free exactly from k = 1 on
    IntPoly f2({1, 0, 1});
    IntPoly f3({0, 0, 1});
    IntPoly f5({0, 0, 1});
    CHECK(combine(f2, f3, f5, 0) == IntPoly({-15, 0, 1}));
    CHECK(minimal_k(f2, f3, f5) == 1);
    CHECK_THROWS_AS(minimal_k(f2, f3, f5, 0), Error);
    // already root-free at k = 0
    CHECK(minimal_k(IntPoly({0, 0, 1}), IntPoly({1, 0, 1}), IntPoly({1, 0, 1})) == 0);
}

TEST_CASE("minimal k for the printed lifts is 4") {
    Int k = minimal_k(paper_lift_f2(), paper_lift_f3(), paper_lift_f5());
    CHECK(k == 4);
    IntPoly at_k = combine(paper_lift_f2(), paper_lift_f3(), paper_lift_f5(), k);
    CHECK(sturm_real_root_count(at_k) == 0);
    IntPoly below = combine(paper_lift_f2(), paper_lift_f3(), paper_lift_f5(), k - 1);
    CHECK(sturm_real_root_count(below) > 0);
}

TEST_CASE("forge produces certified polynomials") {
    ForgeResult r = forge(8, 42);
    CHECK(r.certificate.scenic);
    CHECK(r.f.is_monic());
    CHECK(r.f.degree() == 8);
    CHECK(combine(r.f2, r.f3, r.f5, r.k) == r.f);
    CHECK(r.seed == 42);

    // deterministic given (d, seed)
    ForgeResult again = forge(8, 42);
    CHECK(again.f == r.f);
    CHECK(again.k == r.k);
    ForgeResult other = forge(8, 43);
    CHECK_FALSE(other.f == r.f);

    ForgeResult ten = forge(10, 7);
    CHECK(ten.certificate.scenic);
    CHECK(ten.f.degree() == 10);

    CHECK_THROWS_AS(forge(7, 1), Error);
    CHECK_THROWS_AS(forge(4, 1), Error);
}

TEST_CASE("root-freeness is monotone in k") {
    ForgeResult r = forge(8, 5);
    for (int extra = 0; extra <= 5; ++extra)
        CHECK(sturm_real_root_count(combine(r.f2, r.f3, r.f5, r.k + extra)) == 0);
    if (r.k > 0) CHECK(sturm_real_root_count(combine(r.f2, r.f3, r.f5, r.k - 1)) > 0);
}

TEST_CASE("forged closure oracle agrees for small degrees") {
    for (int d : {6, 8}) {
        ForgeResult r = forge(d, 9);
        auto [ok, order] = symmetric_closure_oracle(d, odd_split(d));
        CHECK(ok);
        CHECK(order == factorial(d));
        CHECK(r.certificate.vdw.pass);
    }
}

TEST_CASE("minimal k against the sampling oracle on the printed lifts") {
    // cross-check Sturm's verdict at k = 3 and k = 4 by dense sign sampling
    IntPoly at3 = combine(paper_lift_f2(), paper_lift_f3(), paper_lift_f5(), 3);
    IntPoly at4 = combine(paper_lift_f2(), paper_lift_f3(), paper_lift_f5(), 4);
    CHECK_FALSE(oracles::positive_on_grid(at3, cauchy_bound(at3), 2000));
    CHECK(oracles::positive_on_grid(at4, cauchy_bound(at4), 2000));
}
