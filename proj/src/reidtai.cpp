#include "scenic/reidtai.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace scenic {

bool GroupElement::is_identity() const {
    return std::all_of(rotations.begin(), rotations.end(), [](int64_t a) { return a == 0; });
}

bool GroupElement::is_quasi_reflection() const {
    return std::count_if(rotations.begin(), rotations.end(), [](int64_t a) { return a != 0; }) == 1;
}

Rat age(const GroupElement& g) {
    Int sum = 0;
    for (int64_t a : g.rotations) sum += static_cast<long>(a);
    Rat r(sum, Int(static_cast<long>(g.order)));
    r.canonicalize();
    return r;
}

std::vector<GroupElement> closure_elements(const DiagonalAction& action) {
    if (action.generators.empty()) return {};
    const size_t dim = action.generators[0].rotations.size();
    int64_t l = 1;
    for (const GroupElement& g : action.generators) {
        if (g.rotations.size() != dim)
            throw std::invalid_argument("generators must share the dimension");
        if (g.order < 1) throw std::invalid_argument("generator order must be positive");
        for (int64_t a : g.rotations)
            if (a < 0 || a >= g.order) throw std::invalid_argument("rotations must lie in [0, order)");
        l = std::lcm(l, g.order);
    }

    std::vector<std::vector<int64_t>> gens;
    for (const GroupElement& g : action.generators) {
        std::vector<int64_t> v(dim);
        for (size_t j = 0; j < dim; ++j) v[j] = g.rotations[j] * (l / g.order);
        gens.push_back(std::move(v));
    }

    std::set<std::vector<int64_t>> seen;
    std::vector<std::vector<int64_t>> frontier{std::vector<int64_t>(dim, 0)};
    seen.insert(frontier[0]);
    constexpr size_t kCap = 1u << 20;
    while (!frontier.empty()) {
        std::vector<std::vector<int64_t>> next;
        for (const auto& v : frontier)
            for (const auto& g : gens) {
                std::vector<int64_t> w(dim);
                for (size_t j = 0; j < dim; ++j) w[j] = (v[j] + g[j]) % l;
                if (seen.insert(w).second) {
                    if (seen.size() > kCap) throw std::runtime_error("group closure exceeds cap");
                    next.push_back(std::move(w));
                }
            }
        frontier = std::move(next);
    }

    std::vector<GroupElement> out;
    for (const auto& v : seen) {
        GroupElement g{l, v};
        if (!g.is_identity()) out.push_back(std::move(g));
    }
    return out;
}

const char* sing_class_name(SingClass c) {
    switch (c) {
    case SingClass::terminal: return "Terminal";
    case SingClass::canonical_not_terminal: return "CanonicalNotTerminal";
    case SingClass::not_canonical: return "NotCanonical";
    }
    return "?";
}

Classification classify(const DiagonalAction& action) {
    Classification result;
    bool any_quasi = false;
    std::vector<GroupElement> elems = closure_elements(action);
    for (GroupElement& g : elems) {
        ElementReport rep;
        rep.quasi_reflection = g.is_quasi_reflection();
        rep.age = age(g);
        rep.g = std::move(g);
        any_quasi = any_quasi || rep.quasi_reflection;
        result.elements.push_back(std::move(rep));
    }
    if (any_quasi)
        raise(errc::quasi_reflection_present,
              "a closure element fixes a hyperplane; classification refused");

    bool any_below_one = false, any_exactly_one = false;
    for (const ElementReport& rep : result.elements) {
        if (rep.age < 1) any_below_one = true;
        if (rep.age == 1) any_exactly_one = true;
    }
    result.kind = any_below_one ? SingClass::not_canonical
                  : any_exactly_one ? SingClass::canonical_not_terminal
                                    : SingClass::terminal;
    return result;
}

namespace {

GroupElement ones_then_zeros(int ones, int dim) {
    GroupElement g;
    g.order = 2;
    g.rotations.assign(static_cast<size_t>(dim), 0);
    for (int i = 0; i < ones; ++i) g.rotations[static_cast<size_t>(i)] = 1;
    return g;
}

} // namespace

std::vector<DiagonalAction> local_models(int n, ModelVariant variant) {
    if (n < 1) throw std::invalid_argument("local models need n >= 1");
    const int extra = variant == ModelVariant::total ? 2 : 1;
    const int dim = 2 * n + extra;

    DiagonalAction model_i{{ones_then_zeros(n + extra, dim)}};
    DiagonalAction model_ii{{ones_then_zeros(2 * n, dim)}};

    GroupElement g1, g2;
    g1.order = g2.order = 2;
    g1.rotations.assign(static_cast<size_t>(dim), 0);
    g2.rotations.assign(static_cast<size_t>(dim), 0);
    for (int i = 0; i < n; ++i) {
        g1.rotations[static_cast<size_t>(i)] = 1;
        g2.rotations[static_cast<size_t>(n + i)] = 1;
    }
    for (int i = 2 * n; i < dim; ++i) {
        g1.rotations[static_cast<size_t>(i)] = 1;
        g2.rotations[static_cast<size_t>(i)] = 1;
    }
    DiagonalAction model_iii{{g1, g2}};

    return {model_i, model_ii, model_iii};
}

} // namespace scenic
