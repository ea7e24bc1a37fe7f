#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "scenic/ffpoly.hpp"
#include "scenic/forge.hpp"

using namespace scenic;

namespace {

ModPoly random_monic(uint64_t p, int d, std::mt19937_64& rng) {
    std::vector<uint64_t> cs(static_cast<size_t>(d) + 1);
    for (int i = 0; i < d; ++i) cs[static_cast<size_t>(i)] = uniform_below(rng, p);
    cs[static_cast<size_t>(d)] = 1;
    return ModPoly::from_prime(p, std::move(cs));
}

} // namespace

TEST_CASE("reduction of the degree-8 example") {
    IntPoly f = paper_example();
    CHECK(reduce(f, 2) == ModPoly(2, {1, 1, 0, 1, 1, 0, 0, 0, 1})); // x^8+x^4+x^3+x+1
    CHECK(reduce(f, 3) == ModPoly(3, {1, 2, 2, 1, 0, 0, 0, 2, 1}));
    CHECK(reduce(f, 5) == ModPoly(5, {3, 0, 1, 0, 0, 0, 4, 0, 1}));

    // the mod-3 image must equal the reduction of the printed factorization
    ModPoly f3 = mod_mul(ModPoly(3, {2, 1}), ModPoly(3, {2, 0, 1, 0, 0, 0, 0, 1}));
    CHECK(reduce(f, 3) == f3);
    // and mod 5 the product of the printed quadratic and the two cubics
    ModPoly f5 = mod_mul(ModPoly(5, {2, 0, 1}),
                         mod_mul(ModPoly(5, {1, 1, 0, 1}), ModPoly(5, {4, 1, 0, 1})));
    CHECK(reduce(f, 5) == f5);

    CHECK(reduce(f, 2).to_string() == "1,1,0,1,1,0,0,0,1 mod 2");
}

TEST_CASE("modulus must be prime") {
    CHECK_THROWS_AS(reduce(paper_example(), 4), std::invalid_argument);
    CHECK_THROWS_AS(ModPoly(6, {1, 1}), std::invalid_argument);
    CHECK(is_small_prime(2));
    CHECK(is_small_prime(199999));
    CHECK_FALSE(is_small_prime(1));
    CHECK_FALSE(is_small_prime(200000));
}

TEST_CASE("irreducibility") {
    CHECK(is_irreducible(ModPoly(2, {1, 1, 0, 1, 1, 0, 0, 0, 1})));
    CHECK_FALSE(is_irreducible(ModPoly(5, {1, 0, 1}))); // (x+2)(x+3)
    CHECK(is_irreducible(ModPoly(3, {2, 0, 1, 0, 0, 0, 0, 1}))); // x^7+x^2+2
    CHECK(is_irreducible(ModPoly(3, {1, 1})));
    CHECK_THROWS_AS(is_irreducible(ModPoly(3, {1, 2})), Error); // not monic
    CHECK_THROWS_AS(is_irreducible(ModPoly(3, {1})), Error);    // degree 0
}

TEST_CASE("irreducibility agrees with the sieve table") {
    for (uint64_t p : {2ull, 3ull, 5ull}) {
        oracles::IrreducibleTable table(p, 4);
        std::mt19937_64 rng(100 + p);
        for (int t = 0; t < 200; ++t) {
            int d = 1 + static_cast<int>(uniform_below(rng, 4));
            ModPoly g = random_monic(p, d, rng);
            CHECK(is_irreducible(g) == table.contains(g));
        }
    }
}

TEST_CASE("ddf shapes of the degree-8 example") {
    IntPoly f = paper_example();
    FactorShape s2 = ddf(reduce(f, 2));
    CHECK(s2.squarefree);
    CHECK(s2.pairs == std::vector<std::pair<int, int>>{{8, 1}});
    FactorShape s3 = ddf(reduce(f, 3));
    CHECK(s3.squarefree);
    CHECK(s3.pairs == std::vector<std::pair<int, int>>{{1, 1}, {7, 1}});
    FactorShape s5 = ddf(reduce(f, 5));
    CHECK(s5.squarefree);
    CHECK(s5.pairs == std::vector<std::pair<int, int>>{{2, 1}, {3, 2}});
    CHECK(s5.to_string() == "{(2,1),(3,2)}");
}

TEST_CASE("ddf reports non-squarefree input") {
    ModPoly g = mod_mul(ModPoly(3, {1, 1}), ModPoly(3, {1, 1}));
    FactorShape s = ddf(g);
    CHECK_FALSE(s.squarefree);
    CHECK(s.pairs.empty());
    CHECK(s.to_string() == "not squarefree");
    CHECK_THROWS_AS(ddf(ModPoly(3, {1, 2})), Error);
}

TEST_CASE("ddf shape reassembles the degree") {
    std::mt19937_64 rng(7);
    int checked = 0;
    for (int t = 0; t < 1500 && checked < 1000; ++t) {
        uint64_t p = std::array<uint64_t, 3>{2, 3, 5}[uniform_below(rng, 3)];
        int d = 1 + static_cast<int>(uniform_below(rng, 8));
        ModPoly g = random_monic(p, d, rng);
        FactorShape s = ddf(g);
        if (!s.squarefree) continue;
        ++checked;
        int total = 0;
        int last_deg = 0;
        for (auto [deg, count] : s.pairs) {
            total += deg * count;
            CHECK(deg > last_deg); // sorted ascending, distinct degrees
            last_deg = deg;
        }
        CHECK(total == d);
    }
    CHECK(checked == 1000);
}

TEST_CASE("ddf agrees with table factorization") {
    std::mt19937_64 rng(13);
    std::map<uint64_t, oracles::IrreducibleTable> tables;
    for (uint64_t p : {2ull, 3ull, 5ull}) tables.emplace(p, oracles::IrreducibleTable(p, 4));
    int checked = 0;
    for (int t = 0; t < 4000 && checked < 1000; ++t) {
        uint64_t p = std::array<uint64_t, 3>{2, 3, 5}[uniform_below(rng, 3)];
        int d = 1 + static_cast<int>(uniform_below(rng, 8));
        ModPoly g = random_monic(p, d, rng);
        if (mod_gcd(g, mod_derivative(g)).degree() != 0) continue;
        ++checked;
        FactorShape via_ddf = ddf(g);
        FactorShape via_table = tables.at(p).factor_shape(g);
        REQUIRE(via_ddf.squarefree);
        CHECK(via_ddf.pairs == via_table.pairs);
    }
    CHECK(checked == 1000);
}

TEST_CASE("irreducible implies a single full-degree ddf factor") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 300; ++t) {
        uint64_t p = std::array<uint64_t, 3>{2, 3, 5}[uniform_below(rng, 3)];
        int d = 1 + static_cast<int>(uniform_below(rng, 8));
        ModPoly g = random_monic(p, d, rng);
        if (!is_irreducible(g)) continue;
        FactorShape s = ddf(g);
        CHECK(s.squarefree);
        CHECK(s.pairs == std::vector<std::pair<int, int>>{{d, 1}});
    }
}

TEST_CASE("random irreducible generation") {
    std::mt19937_64 rng(42);
    // the unique monic irreducible quadratic mod 2
    CHECK(random_irreducible(2, 2, rng) == ModPoly(2, {1, 1, 1}));
    ModPoly lin = random_irreducible(3, 1, rng);
    CHECK(lin.degree() == 1);
    CHECK(lin.is_monic());
    for (int t = 0; t < 20; ++t) {
        ModPoly g = random_irreducible(2, 8, rng);
        CHECK(g.degree() == 8);
        CHECK(is_irreducible(g));
    }
    // deterministic given (p, m, seed)
    std::mt19937_64 a(5), b(5);
    CHECK(random_irreducible(5, 6, a) == random_irreducible(5, 6, b));
}

TEST_CASE("canonical lift round trip") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        uint64_t p = std::array<uint64_t, 3>{2, 3, 5}[uniform_below(rng, 3)];
        ModPoly g = random_monic(p, 1 + static_cast<int>(uniform_below(rng, 8)), rng);
        IntPoly lift = lift_canonical(g);
        CHECK(reduce(lift, p) == g);
        for (size_t i = 0; i < lift.size(); ++i) {
            CHECK(lift.coeff(i) >= 0);
            CHECK(lift.coeff(i) < static_cast<long>(p));
        }
    }
}

TEST_CASE("prime sieve") {
    std::vector<uint64_t> ps = primes_up_to(100);
    CHECK(ps.size() == 25);
    CHECK(ps.front() == 2);
    CHECK(ps.back() == 97);
    CHECK(primes_up_to(1).empty());
    for (uint64_t p : ps) CHECK(is_small_prime(p));
}
