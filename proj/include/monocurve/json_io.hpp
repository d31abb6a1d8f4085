#pragma once
// JSON and TSV serialization of bases, reports and tables.
#include <optional>
#include <string>

#include <json.hpp>

#include "monocurve/apery.hpp"
#include "monocurve/criteria.hpp"
#include "monocurve/families.hpp"
#include "monocurve/groebner.hpp"
#include "monocurve/toric.hpp"

namespace monocurve {

using json = nlohmann::ordered_json;

json order_to_json(const OrderSpec& o);
json basis_to_json(const GroebnerBasis& g);
json report_to_json(const AcmReport& r);
json family_to_json(const FamilyInstance& inst, const AcmReport& r);

// {"gb": [...], "ini_gens": [...], "std_monomials_count": N or null}
json gb_fragment_json(const Sequence& a, const GroebnerBasis& g,
                      std::optional<std::int64_t> std_count);

// residue, nu, mu, phi, dual_deg, in_dual_apery per row
std::string apery_tsv(const Sequence& a, const AperyTable& t);
json apery_json(const Sequence& a, const AperyTable& t);

}  // namespace monocurve
