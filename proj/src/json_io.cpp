#include "scenic/json_io.hpp"

namespace scenic {

std::string rat_string(const Rat& r) {
    return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

Json to_json(const FactorShape& s) {
    Json j;
    j["squarefree"] = s.squarefree;
    Json pairs = Json::array();
    for (auto [deg, count] : s.pairs) pairs.push_back(Json::array({deg, count}));
    j["pairs"] = std::move(pairs);
    return j;
}

Json to_json(const VdWCertificate& c) {
    Json j;
    j["degree"] = c.degree;
    j["shape2"] = to_json(c.shape2);
    j["shape3"] = to_json(c.shape3);
    j["shape5"] = to_json(c.shape5);
    j["cond1"] = c.cond1;
    j["cond2"] = c.cond2;
    j["cond3"] = c.cond3;
    j["pass"] = c.pass;
    return j;
}

Json to_json(const ScenicCertificate& c) {
    Json j;
    j["monic"] = c.monic;
    j["even_degree"] = c.even_degree;
    j["squarefree"] = c.squarefree;
    j["real_root_count"] = c.real_root_count;
    j["vdw_applicable"] = c.vdw_applicable;
    if (c.vdw_applicable) j["vdw"] = to_json(c.vdw);
    j["scenic"] = c.scenic;
    return j;
}

Json to_json(const CycleHistogram& h) {
    Json j;
    j["prime_bound"] = h.prime_bound;
    j["primes_used"] = h.primes_used;
    j["ramified"] = h.ramified;
    Json buckets = Json::array();
    for (const auto& [partition, count] : h.buckets) {
        Json b;
        b["partition"] = partition;
        b["count"] = count;
        buckets.push_back(std::move(b));
    }
    j["buckets"] = std::move(buckets);
    j["irreducible_fraction"] = rat_string(h.irreducible_fraction);
    j["irreducible_fraction_value"] = h.irreducible_fraction.get_d();
    return j;
}

Json to_json(const ForgeResult& r) {
    Json j;
    j["f"] = r.f.to_csv();
    j["f2"] = r.f2.to_csv();
    j["f3"] = r.f3.to_csv();
    j["f5"] = r.f5.to_csv();
    j["k"] = r.k.get_str();
    j["scenic"] = r.certificate.scenic;
    return j;
}

Json to_json(const TorusModel& t) {
    Json j;
    const int d = t.f.degree();
    const int n = d / 2;
    j["degree"] = d;
    j["n"] = n;
    j["f"] = t.f.to_csv();

    Json eigen = Json::array();
    for (int idx : t.spectrum.selected) {
        const Cplx& mu = t.spectrum.roots[static_cast<size_t>(idx)];
        eigen.push_back(Json::array(
            {static_cast<double>(mu.real()), static_cast<double>(mu.imag())}));
    }
    j["selected_eigenvalues"] = std::move(eigen);
    j["min_imag"] = static_cast<double>(t.spectrum.min_imag);

    Json pi = Json::array(); // row-major [re, im] pairs
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < d; ++k)
            pi.push_back(Json::array({static_cast<double>(t.Pi(i, k).real()),
                                      static_cast<double>(t.Pi(i, k).imag())}));
    j["pi"] = std::move(pi);
    j["pi_rows"] = n;
    j["pi_cols"] = d;

    Json jm = Json::array(); // row-major
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) jm.push_back(static_cast<double>(t.J(i, k)));
    j["j"] = std::move(jm);

    j["tol"] = static_cast<double>(t.tol);
    j["residuals"] = t.residual_report;
    j["within_tol"] = t.within_tol();
    return j;
}

Json to_json(const Classification& c) {
    Json j;
    j["classification"] = sing_class_name(c.kind);
    Json elems = Json::array();
    for (const ElementReport& rep : c.elements) {
        Json e;
        e["order"] = rep.g.order;
        e["rotations"] = rep.g.rotations;
        e["age"] = rat_string(rep.age);
        e["quasi_reflection"] = rep.quasi_reflection;
        elems.push_back(std::move(e));
    }
    j["elements"] = std::move(elems);
    return j;
}

} // namespace scenic
