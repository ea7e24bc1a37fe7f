#include "scenic/ffpoly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace scenic {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 invmod(u64 a, u64 p) {
    // extended Euclid; p prime, a != 0
    int64_t t = 0, newt = 1;
    int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a % p);
    while (newr != 0) {
        int64_t q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    return t < 0 ? static_cast<u64>(t + static_cast<int64_t>(p)) : static_cast<u64>(t);
}

constexpr u64 kTrialDivisionBound = 1ull << 20;

} // namespace

bool is_small_prime(u64 p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (u64 d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

ModPoly::ModPoly(u64 p_, std::vector<u64> cs) : p(p_), coeffs(std::move(cs)) {
    if (p < 2 || (p < kTrialDivisionBound && !is_small_prime(p)))
        throw std::invalid_argument("ModPoly: modulus " + std::to_string(p) + " is not prime");
    normalize();
}

ModPoly ModPoly::from_prime(u64 p, std::vector<u64> cs) {
    ModPoly g;
    g.p = p;
    g.coeffs = std::move(cs);
    g.normalize();
    return g;
}

void ModPoly::normalize() {
    if (coeffs.empty()) coeffs.push_back(0);
    for (u64& c : coeffs) c %= p;
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
}

std::string ModPoly::to_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out << ',';
        out << coeffs[i];
    }
    out << " mod " << p;
    return out.str();
}

std::string FactorShape::to_string() const {
    if (!squarefree) return "not squarefree";
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (i) out << ',';
        out << '(' << pairs[i].first << ',' << pairs[i].second << ')';
    }
    out << '}';
    return out.str();
}

ModPoly reduce(const IntPoly& f, u64 p) {
    if (p < 2 || (p < kTrialDivisionBound && !is_small_prime(p)))
        throw std::invalid_argument("reduce: modulus is not prime");
    std::vector<u64> cs(f.size());
    Int r;
    for (size_t i = 0; i < f.size(); ++i) {
        mpz_mod_ui(r.get_mpz_t(), f.coeff(i).get_mpz_t(), p); // canonical in [0, p)
        cs[i] = r.get_ui();
    }
    return ModPoly::from_prime(p, std::move(cs));
}

IntPoly lift_canonical(const ModPoly& g) {
    std::vector<Int> cs(g.coeffs.size());
    for (size_t i = 0; i < cs.size(); ++i) cs[i] = Int(static_cast<unsigned long>(g.coeffs[i]));
    return IntPoly(std::move(cs));
}

ModPoly mod_add(const ModPoly& a, const ModPoly& b) {
    std::vector<u64> cs(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (size_t i = 0; i < cs.size(); ++i) {
        u64 x = i < a.coeffs.size() ? a.coeffs[i] : 0;
        u64 y = i < b.coeffs.size() ? b.coeffs[i] : 0;
        cs[i] = (x + y) % a.p;
    }
    return ModPoly::from_prime(a.p, std::move(cs));
}

ModPoly mod_sub(const ModPoly& a, const ModPoly& b) {
    std::vector<u64> cs(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (size_t i = 0; i < cs.size(); ++i) {
        u64 x = i < a.coeffs.size() ? a.coeffs[i] : 0;
        u64 y = i < b.coeffs.size() ? b.coeffs[i] : 0;
        cs[i] = submod(x, y, a.p);
    }
    return ModPoly::from_prime(a.p, std::move(cs));
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b) {
    if (a.is_zero() || b.is_zero()) return ModPoly::zero(a.p);
    const u64 p = a.p;
    std::vector<u64> cs(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            cs[i + j] = (cs[i + j] + static_cast<u128>(a.coeffs[i]) * b.coeffs[j]) % p;
    }
    return ModPoly::from_prime(p, std::move(cs));
}

std::pair<ModPoly, ModPoly> mod_divmod(const ModPoly& a, const ModPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("mod_divmod: division by zero");
    const u64 p = a.p;
    const int db = b.degree();
    std::vector<u64> rem = a.coeffs;
    int dr = a.degree();
    if (dr < db) return {ModPoly::zero(p), a};
    std::vector<u64> quo(static_cast<size_t>(dr - db) + 1, 0);
    const u64 inv = invmod(b.coeffs.back(), p);
    while (dr >= db && !(dr == 0 && rem[0] == 0)) {
        u64 c = mulmod(rem[static_cast<size_t>(dr)], inv, p);
        int s = dr - db;
        quo[static_cast<size_t>(s)] = c;
        for (int i = 0; i <= db; ++i) {
            size_t idx = static_cast<size_t>(s + i);
            rem[idx] = submod(rem[idx], mulmod(c, b.coeffs[static_cast<size_t>(i)], p), p);
        }
        while (dr >= 0 && rem[static_cast<size_t>(dr)] == 0) --dr;
        if (dr < 0) break;
    }
    rem.resize(static_cast<size_t>(std::max(dr, 0)) + 1);
    return {ModPoly::from_prime(p, std::move(quo)), ModPoly::from_prime(p, std::move(rem))};
}

ModPoly mod_rem(const ModPoly& a, const ModPoly& b) { return mod_divmod(a, b).second; }

ModPoly mod_gcd(ModPoly a, ModPoly b) {
    const u64 p = a.p;
    while (!b.is_zero()) {
        ModPoly r = mod_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.coeffs.back() != 1) {
        const u64 inv = invmod(a.coeffs.back(), p);
        for (u64& c : a.coeffs) c = mulmod(c, inv, p);
    }
    return a;
}

ModPoly mod_derivative(const ModPoly& a) {
    if (a.degree() < 1) return ModPoly::zero(a.p);
    std::vector<u64> cs(a.coeffs.size() - 1);
    for (size_t i = 1; i < a.coeffs.size(); ++i) cs[i - 1] = mulmod(a.coeffs[i], i % a.p, a.p);
    return ModPoly::from_prime(a.p, std::move(cs));
}

ModPoly mod_powmod(const ModPoly& base, u64 e, const ModPoly& m) {
    ModPoly result = ModPoly::one(m.p);
    ModPoly b = mod_rem(base, m);
    while (e > 0) {
        if (e & 1) result = mod_rem(mod_mul(result, b), m);
        b = mod_rem(mod_mul(b, b), m);
        e >>= 1;
    }
    return result;
}

namespace {

std::vector<int> prime_factors(int n) {
    std::vector<int> qs;
    for (int q = 2; q * q <= n; ++q)
        if (n % q == 0) {
            qs.push_back(q);
            while (n % q == 0) n /= q;
        }
    if (n > 1) qs.push_back(n);
    return qs;
}

/* x^(p^k) mod g by iterated Frobenius: h_{i+1} = h_i^p mod g. */
ModPoly frobenius_power(const ModPoly& g, int k) {
    ModPoly h = ModPoly::x(g.p);
    for (int i = 0; i < k; ++i) h = mod_powmod(h, g.p, g);
    return h;
}

} // namespace

bool is_irreducible(const ModPoly& g) {
    if (!g.is_monic() || g.degree() < 1)
        raise(errc::not_monic, "irreducibility test requires a monic polynomial of degree >= 1");
    const int d = g.degree();
    if (d == 1) return true;
    const ModPoly x = ModPoly::x(g.p);
    // x^(p^d) == x mod g
    if (!(frobenius_power(g, d) == mod_rem(x, g))) return false;
    for (int q : prime_factors(d)) {
        ModPoly h = mod_sub(frobenius_power(g, d / q), x);
        if (mod_gcd(g, h).degree() != 0) return false;
    }
    return true;
}

FactorShape ddf(const ModPoly& g_in) {
    if (!g_in.is_monic()) raise(errc::not_monic, "ddf requires a monic polynomial");
    FactorShape shape;
    if (mod_gcd(g_in, mod_derivative(g_in)).degree() != 0) {
        shape.squarefree = false;
        return shape;
    }
    shape.squarefree = true;
    ModPoly g = g_in;
    ModPoly h = mod_rem(ModPoly::x(g.p), g); // x^(p^k) mod g, k = 0
    int k = 0;
    while (g.degree() > 0 && 2 * (k + 1) <= g.degree()) {
        ++k;
        h = mod_powmod(h, g.p, g);
        ModPoly d = mod_gcd(g, mod_sub(h, ModPoly::x(g.p)));
        if (d.degree() > 0) {
            shape.pairs.emplace_back(k, d.degree() / k);
            g = mod_divmod(g, d).first;
            h = mod_rem(h, g);
        }
    }
    if (g.degree() > 0) shape.pairs.emplace_back(g.degree(), 1);
    std::sort(shape.pairs.begin(), shape.pairs.end());
    return shape;
}

uint64_t uniform_below(std::mt19937_64& rng, u64 n) {
    const u64 limit = std::numeric_limits<u64>::max() / n * n;
    u64 v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

ModPoly random_irreducible(u64 p, int m, std::mt19937_64& rng) {
    if (m < 1) throw std::invalid_argument("random_irreducible: degree must be >= 1");
    const int attempts_cap = 64 * m;
    for (int attempt = 0; attempt < attempts_cap; ++attempt) {
        std::vector<u64> cs(static_cast<size_t>(m) + 1);
        for (int i = 0; i < m; ++i) cs[static_cast<size_t>(i)] = uniform_below(rng, p);
        cs[static_cast<size_t>(m)] = 1;
        ModPoly g = ModPoly::from_prime(p, std::move(cs));
        if (is_irreducible(g)) return g;
    }
    raise(errc::retry_limit_exceeded,
          "no irreducible of degree " + std::to_string(m) + " found in " +
              std::to_string(attempts_cap) + " attempts");
}

std::vector<u64> primes_up_to(u64 n) {
    std::vector<u64> ps;
    if (n < 2) return ps;
    std::vector<bool> composite(n + 1, false);
    for (u64 i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        ps.push_back(i);
        for (u64 j = i * i; j <= n; j += i) composite[j] = true;
    }
    return ps;
}

} // namespace scenic
