#pragma once

#include <string>

#include <json.hpp>

#include "szlenklab/certificate.hpp"
#include "szlenklab/orlicz.hpp"
#include "szlenklab/sparse_vec.hpp"
#include "szlenklab/szlenk.hpp"
#include "szlenklab/verify.hpp"
#include "szlenklab/witness.hpp"

namespace szlenklab {

using Json = nlohmann::ordered_json;

// Interchange format for vectors: JSON array of [index, value] pairs.
Json to_json(const SparseVec& v);
SparseVec sparse_vec_from_json(const Json& j);

Json to_json(const WitnessNode& node);
Json to_json(const DerivationCertificate& cert);
DerivationCertificate certificate_from_json(const Json& j);
Json to_json(const szlenk::RadiusCurve& curve);
Json to_json(const verify::SuiteReport& report);
Json to_json(const orlicz::KktReport& report);
Json to_json(const orlicz::NotABallReport& report);

// CSV with a stable column order and 12 significant digits:
// eps,rLower,rUpper,RLower,RUpper,provenance
std::string curve_to_csv(const szlenk::RadiusCurve& curve);

SpaceRef space_from_name(const std::string& name, double orlicz_A, double orlicz_B);

}  // namespace szlenklab
