#pragma once

#include <string>

#include <json.hpp>

#include "pacdim/bounds.hpp"
#include "pacdim/classes.hpp"
#include "pacdim/dimensions.hpp"
#include "pacdim/gc.hpp"
#include "pacdim/learning.hpp"
#include "pacdim/measure.hpp"
#include "pacdim/quotient.hpp"

namespace pacdim {

using Json = nlohmann::json;

// Scalars are exact rational strings "p/q"; integers are accepted on input.
Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& j);

Json domain_to_json(const Domain& d);        // {"size": N}
Domain domain_from_json(const Json& j);
Json set_to_json(const DomainSet& s);        // sorted point array
DomainSet set_from_json(const Domain& d, const Json& j);

Json concept_class_to_json(const ConceptClass& c);
ConceptClass concept_class_from_json(const Json& j);
Json function_class_to_json(const FunctionClass& f);
FunctionClass function_class_from_json(const Json& j);

Json measure_to_json(const DiscreteMeasure& mu);
DiscreteMeasure measure_from_json(const Json& j);

Json null_region_to_json(const NullRegion& z);            // {"z": [points]}
NullRegion null_region_from_json(const Domain& d, const Json& j);

// {"n":..., "selectors":{"J-bitmask": index}, "witness":[...], "epsilon":"p/q"}
Json certificate_to_json(const ShatterCertificate& cert);
ShatterCertificate certificate_from_json(const Json& j);

Json cluster_family_to_json(const ClusterFamily& family);
ClusterFamily cluster_family_from_json(const Json& j);

Json traced_class_to_json(const TracedClass& traced);  // carries "index_map"

Json profile_to_json(const FatDimensionProfile& profile);
FatDimensionProfile profile_from_json(const Json& j);

Json gc_report_to_json(const GCReport& report, const Rational& eps);
Json pac_report_to_json(const PACEvalReport& report, const Rational& eps);

/// Sorted keys, two-space indent, trailing newline: byte-stable output.
std::string canonical_dump(const Json& j);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace pacdim
