#include "scenic/galois.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace scenic {

namespace {

bool is_full_degree_shape(const FactorShape& s, int d) {
    return s.squarefree && s.pairs.size() == 1 && s.pairs[0] == std::make_pair(d, 1);
}

bool is_linear_plus_rest_shape(const FactorShape& s, int d) {
    std::vector<std::pair<int, int>> want{{1, 1}, {d - 1, 1}};
    return s.squarefree && s.pairs == want;
}

/* one quadratic factor, and one or two factors of odd degree totaling d-2 */
bool is_quad_plus_odd_shape(const FactorShape& s, int d) {
    if (!s.squarefree) return false;
    int quad_count = 0, odd_factors = 0, odd_degree_total = 0;
    for (auto [deg, count] : s.pairs) {
        if (deg == 2) {
            quad_count = count;
        } else if (deg % 2 == 1) {
            odd_factors += count;
            odd_degree_total += deg * count;
        } else {
            return false; // an even factor degree other than 2
        }
    }
    return quad_count == 1 && (odd_factors == 1 || odd_factors == 2) &&
           odd_degree_total == d - 2;
}

} // namespace

VdWCertificate check_vdw(const IntPoly& f) {
    if (!f.is_monic()) raise(errc::not_monic, "certificate requires a monic polynomial");
    if (f.degree() < 4) raise(errc::degree_too_small, "certificate requires degree >= 4");
    VdWCertificate cert;
    cert.degree = f.degree();
    cert.shape2 = ddf(reduce(f, 2));
    cert.shape3 = ddf(reduce(f, 3));
    cert.shape5 = ddf(reduce(f, 5));
    cert.cond1 = is_full_degree_shape(cert.shape2, cert.degree);
    cert.cond2 = is_linear_plus_rest_shape(cert.shape3, cert.degree);
    cert.cond3 = is_quad_plus_odd_shape(cert.shape5, cert.degree);
    cert.pass = cert.cond1 && cert.cond2 && cert.cond3;
    return cert;
}

ScenicCertificate scenic_check(const IntPoly& f) {
    ScenicCertificate cert;
    if (f.is_zero()) return cert; // all checks fail; nothing to analyze
    cert.monic = f.is_monic();
    cert.even_degree = f.degree() >= 2 && f.degree() % 2 == 0;
    cert.squarefree = squarefree_part_check(f);
    if (cert.monic && f.degree() >= 4) {
        cert.vdw = check_vdw(f);
        cert.vdw_applicable = true;
    }
    // count distinct real roots via the squarefree part f / gcd(f, f')
    IntPoly sf = f.primitive_part();
    if (!cert.squarefree) sf = exact_divide(sf, primitive_gcd(sf, sf.derivative()));
    cert.real_root_count = sturm_real_root_count(sf);
    cert.scenic = cert.monic && cert.even_degree && cert.squarefree &&
                  cert.vdw_applicable && cert.vdw.pass && cert.real_root_count == 0;
    return cert;
}

namespace {

struct ShapeHistogram {
    std::map<std::vector<int>, uint64_t> buckets;
    std::vector<uint64_t> ramified;
    uint64_t used = 0;
};

ShapeHistogram scan_range(const IntPoly& f, const Int& disc,
                          const std::vector<uint64_t>& primes, size_t lo, size_t hi) {
    ShapeHistogram h;
    for (size_t i = lo; i < hi; ++i) {
        uint64_t p = primes[i];
        if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) {
            h.ramified.push_back(p);
            continue;
        }
        FactorShape s = ddf(reduce(f, p));
        std::vector<int> partition;
        for (auto [deg, count] : s.pairs)
            for (int c = 0; c < count; ++c) partition.push_back(deg);
        std::sort(partition.rbegin(), partition.rend());
        ++h.buckets[partition];
        ++h.used;
    }
    return h;
}

} // namespace

CycleHistogram frobenius_scan(const IntPoly& f, uint64_t prime_bound, int workers) {
    if (!f.is_monic()) raise(errc::not_monic, "scan requires a monic polynomial");
    if (!squarefree_part_check(f)) raise(errc::not_squarefree, "scan requires a squarefree polynomial");
    if (workers < 1) workers = 1;

    const Int disc = discriminant(f);
    const std::vector<uint64_t> primes = primes_up_to(prime_bound);

    std::vector<ShapeHistogram> parts(static_cast<size_t>(workers));
    if (workers == 1) {
        parts[0] = scan_range(f, disc, primes, 0, primes.size());
    } else {
        std::vector<std::thread> pool;
        const size_t nw = static_cast<size_t>(workers);
        const size_t chunk = (primes.size() + nw - 1) / nw;
        for (int w = 0; w < workers; ++w) {
            size_t lo = std::min(static_cast<size_t>(w) * chunk, primes.size());
            size_t hi = std::min(lo + chunk, primes.size());
            pool.emplace_back([&, w, lo, hi] { parts[static_cast<size_t>(w)] = scan_range(f, disc, primes, lo, hi); });
        }
        for (auto& t : pool) t.join();
    }

    CycleHistogram out;
    out.prime_bound = prime_bound;
    for (const ShapeHistogram& h : parts) {
        out.primes_used += h.used;
        out.ramified.insert(out.ramified.end(), h.ramified.begin(), h.ramified.end());
        for (const auto& [key, count] : h.buckets) out.buckets[key] += count;
    }
    std::sort(out.ramified.begin(), out.ramified.end());

    std::vector<int> full{f.degree()};
    uint64_t irr = out.buckets.count(full) ? out.buckets.at(full) : 0;
    out.irreducible_fraction = out.primes_used
                                   ? Rat(Int(static_cast<unsigned long>(irr)),
                                         Int(static_cast<unsigned long>(out.primes_used)))
                                   : Rat(0);
    out.irreducible_fraction.canonicalize();
    return out;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

Perm perm_power(Perm a, int e) {
    Perm r(a.size());
    std::iota(r.begin(), r.end(), static_cast<uint8_t>(0));
    while (e > 0) {
        if (e & 1) r = perm_compose(r, a);
        a = perm_compose(a, a);
        e >>= 1;
    }
    return r;
}

Perm cycle_perm(int d, int start, int len) {
    Perm p(static_cast<size_t>(d));
    std::iota(p.begin(), p.end(), static_cast<uint8_t>(0));
    for (int i = 0; i < len; ++i)
        p[static_cast<size_t>(start + i)] = static_cast<uint8_t>(start + (i + 1) % len);
    return p;
}

namespace {

uint64_t encode(const Perm& p) {
    uint64_t v = 0;
    for (size_t i = 0; i < p.size(); ++i) v |= static_cast<uint64_t>(p[i]) << (8 * i);
    return v;
}

} // namespace

uint64_t closure_order(const std::vector<Perm>& gens, uint64_t cap) {
    if (gens.empty()) return 1;
    const size_t d = gens[0].size();
    if (d > 8) raise(errc::degree_too_large, "closure is limited to degree <= 8");
    Perm id(d);
    std::iota(id.begin(), id.end(), static_cast<uint8_t>(0));
    std::unordered_set<uint64_t> seen{encode(id)};
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& p : frontier)
            for (const Perm& g : gens) {
                Perm q = perm_compose(g, p);
                if (seen.insert(encode(q)).second) {
                    if (seen.size() > cap) throw std::runtime_error("closure exceeds cap");
                    next.push_back(std::move(q));
                }
            }
        frontier = std::move(next);
    }
    return seen.size();
}

uint64_t factorial(int n) {
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
    return f;
}

std::pair<bool, uint64_t> symmetric_closure_oracle(int d, std::pair<int, int> odd_split) {
    if (d > 8) raise(errc::degree_too_large, "oracle enumerates at most S_8");
    auto [o1, o2] = odd_split;
    if (d < 3 || o1 < 1 || o2 < 1 || o1 % 2 == 0 || o2 % 2 == 0 || o1 + o2 != d - 2)
        throw std::invalid_argument("odd split must be two odd parts summing to d - 2");

    Perm full_cycle = cycle_perm(d, 0, d);
    Perm sub_cycle = cycle_perm(d, 0, d - 1);
    // cycle type (2, o1, o2); its lcm(o1,o2)-th power is a transposition
    // because the lcm is odd
    Perm mixed = perm_compose(cycle_perm(d, 0, 2),
                              perm_compose(cycle_perm(d, 2, o1), cycle_perm(d, 2 + o1, o2)));
    int l = std::lcm(o1, o2);
    Perm transposition = perm_power(mixed, l);

    uint64_t order = closure_order({full_cycle, sub_cycle, transposition});
    return {order == factorial(d), order};
}

} // namespace scenic
