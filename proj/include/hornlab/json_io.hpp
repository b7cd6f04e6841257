#pragma once

// JSON encodings of the exact types. Rationals travel as "p/q" strings (q
// omitted when 1); floats appear only in oracle outputs.

#include "hornlab/approx.hpp"
#include "hornlab/functional.hpp"
#include "hornlab/horn.hpp"
#include "hornlab/oracle.hpp"
#include "hornlab/screl.hpp"
#include "hornlab/step_quantile.hpp"

#include <json.hpp>

#include <string>

namespace hornlab {

using Json = nlohmann::json;

Json to_json(const StepQuantile& q);
StepQuantile step_quantile_from_json(const Json& j);

Json to_json(const QuantileTriple& q);
QuantileTriple quantile_triple_from_json(const Json& j);

Json to_json(const HornTriple& h);
HornTriple horn_triple_from_json(const Json& j);

Json to_json(const MembershipVerdict& v);

Json to_json(const ApproxReport& r);

Json to_json(const SpectraSample& s);
SpectraSample spectra_sample_from_json(const Json& j);

Json to_json(const SoundnessReport& r);

Json relation_to_json(const FiniteRelation& r);
FiniteRelation relation_from_json(const Json& j);

/// Parses a JSON document, converting parse failures to PreconditionError.
Json parse_json(const std::string& text);
Json load_json_file(const std::string& path);

} // namespace hornlab
