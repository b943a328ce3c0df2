#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qhilb/diagram.hpp"
#include "qhilb/hilbert_function.hpp"
#include "qhilb/hookcode.hpp"
#include "qhilb/identities.hpp"
#include "qhilb/nested.hpp"
#include "qhilb/qpoly.hpp"

namespace qhilb::io {

using nlohmann::json;

/// Comma-separated integers; the empty string is the empty list.
std::vector<int> parse_int_list(std::string_view text);
YoungDiagram parse_partition(std::string_view text);
HilbertFunction parse_hilbert(std::string_view text);
/// Parts separated by ';', e.g. "1,1;1".
NestedHilbertFunctions parse_nested(std::string_view text);

/// {"vars":[main,t],"terms":[{"e":[a,b],"c":"<decimal>"}]} in canonical order.
json to_json(const MPoly& p, const std::string& main_var = "L", const std::string& t_var = "t");
MPoly poly_from_json(const json& j);

/// {"H":[...],"k":K,"parts":[[rows...],...]} with trailing empty parts omitted.
json to_json(const DiagramSequence& p);
DiagramSequence sequence_from_json(const json& j);

/// {"k":K,"parts":[[d...],...]}.
json to_json(const NestedHilbertFunctions& bh);
NestedHilbertFunctions nested_from_json(const json& j);

/// {"identity":...,"order":N,"equal":bool,"lhs":...,"rhs":...,"first_diff":...}
json to_json(const VerificationReport& r);

}  // namespace qhilb::io
