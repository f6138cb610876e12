#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "unbias/constructions.hpp"
#include "unbias/field.hpp"
#include "unbias/flatmat.hpp"
#include "unbias/mubcheck.hpp"
#include "unbias/rds.hpp"
#include "unbias/welch.hpp"

namespace unbias {

/// Ordered JSON keeps insertion order, making every report byte-stable for
/// a fixed input.
using Json = nlohmann::ordered_json;

Json rat_to_json(const Rat& q);          // [num, den]
Rat rat_from_json(const Json& j);

Json group_to_json(const AbelianGroup& G);  // {"moduli": [...]}
AbelianGroup group_from_json(const Json& j);

Json field_to_json(const FiniteField& F);  // {"p":..,"k":..,"h":[...]}
FiniteField field_from_json(const Json& j);

/// Exact: {"nroot":N,"phases":[[a,..],..],"normalized":b}, entry =
/// exp(2*pi*i*a/N). Float: {"re":[[..]],"im":[[..]],"normalized":b} with
/// unit-modulus entries.
Json matrix_to_json(const FlatMatrix& M);
FlatMatrix matrix_from_json(const Json& j);

/// {"form":"raw"|"muh_standard","bases":[...]} where each basis is a matrix
/// object or {"identity": n}.
Json system_to_json(const std::vector<FlatMatrix>& mats, bool with_identity);
BasisSystem system_from_json(const Json& j, const RunConfig& cfg = {});

/// {"group":..,"codomain":..,"table":[[coords, value],..]} with torus values
/// as rational pairs per coordinate.
Json function_to_json(const TorusFunction& f);
TorusFunction function_from_json(const Json& j);

/// {"K":..,"N":[..],"R":[..],"params":[m,n,r,lambda]}; K is either a plain
/// {"moduli":..} group or {"domain_moduli":..,"codomain_moduli":..,"s":..}
/// for a carry extension; elements are coordinate arrays.
Json rds_to_json(const RelativeDifferenceSet& D);
RelativeDifferenceSet rds_from_json(const Json& j);

Json presentation_to_json(const NPresentation& P, const GroupTable& K);
NPresentation presentation_from_json(const Json& j, const GroupTable& K);

Json report_to_json(const WelchReport& rep, const AttainResult* attain = nullptr);
Json report_to_json(const MubVerdict& v);
Json report_to_json(const PlanarityReport& rep);
Json report_to_json(const RdsReport& rep, const GroupTable& K);
Json report_to_json(const GlavnajaResult& res);

/// Element index of a GroupTable from its coordinate array and back.
Json table_element_to_json(const GroupTable& K, Int e);
Int table_element_from_json(const GroupTable& K, const Json& j);

}  // namespace unbias
