#ifndef SCENIC_JSON_IO_HPP
#define SCENIC_JSON_IO_HPP

#include <json.hpp>

#include "scenic/forge.hpp"
#include "scenic/galois.hpp"
#include "scenic/reidtai.hpp"
#include "scenic/torus.hpp"

namespace scenic {

/* Ordered documents keep the key order stable, so identical runs produce
 * byte-identical output. Exact quantities (coefficients, k, ages, fractions)
 * are serialized as decimal strings; only genuinely floating data (residuals,
 * matrix entries) becomes JSON numbers. */
using Json = nlohmann::ordered_json;

Json to_json(const FactorShape& s);
Json to_json(const VdWCertificate& c);
Json to_json(const ScenicCertificate& c);
Json to_json(const CycleHistogram& h);
Json to_json(const ForgeResult& r);
Json to_json(const TorusModel& t);
Json to_json(const Classification& c);

std::string rat_string(const Rat& r);

} // namespace scenic

#endif
