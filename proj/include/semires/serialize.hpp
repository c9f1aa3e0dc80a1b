#pragma once

#include <string>

#include "json.hpp"
#include "semires/indispensability.hpp"
#include "semires/invariants.hpp"
#include "semires/presentation.hpp"
#include "semires/resolution.hpp"

namespace semires {

using Json = nlohmann::json;

Json to_json(const NumericalSemigroup& s);
Json to_json(const Classification& c);
Json to_json(const GradedMatrix& m);
/// {"class", "generators", "N", "betti_degrees" (levels 0..k-1, sorted), "maps", "adjustments"}
Json to_json(const GradedResolution& r);
Json to_json(const KPolynomial& k);
Json to_json(const IndispensabilityReport& r);
Json to_json(const VerificationReport& r);
Json to_json(const DegreeRelations& d);

/// Aligned text rendering of every map, one block per phi_i.
std::string render_text(const GradedResolution& r);

}  // namespace semires
