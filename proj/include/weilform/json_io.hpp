#ifndef WEILFORM_JSON_IO_HPP
#define WEILFORM_JSON_IO_HPP

#include <json.hpp>

#include "weilform/checks.hpp"
#include "weilform/duality.hpp"
#include "weilform/groups.hpp"
#include "weilform/nilpotent.hpp"

namespace weilform {

using json = nlohmann::json;

// Rationals serialize as strings "p/q"; polynomials as arrays of rational
// strings, constant term first.
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);
json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

json module_to_json(const FrobeniusModule& m);
FrobeniusModule module_from_json(const json& j);

json profile_to_json(const JordanProfile& p);
json verdict_to_json(const DualityVerdict& v);

NilpotentDatum nilpotent_from_json(const json& j);

json class_to_json(const VirtualWeilClass& x);
VirtualWeilClass class_from_json(const json& j);
json membership_to_json(const MembershipReport& r);

FiniteGroup group_from_json(const json& j);
json group_to_json(const FiniteGroup& g);
GroupRep rep_from_json(const FiniteGroup& g, const json& j);
json rep_to_json(const GroupRep& r);

IhInput ih_input_from_json(const json& j);
json report_to_json(const Report& r);
Report report_from_json(const json& j);

}  // namespace weilform

#endif
