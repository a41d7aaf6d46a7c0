#pragma once

#include <json.hpp>

#include "grascurve/curve.hpp"
#include "grascurve/ffenum.hpp"
#include "grascurve/interp.hpp"
#include "grascurve/verify.hpp"

namespace grascurve {

using json = nlohmann::ordered_json;

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

json rat_vector_to_json(const std::vector<Rat>& v);
std::vector<Rat> rat_vector_from_json(const json& j);

json mat_to_json(const Mat<Rat>& m);            // array of row arrays
Mat<Rat> mat_from_json(const json& j);

json subspace_to_json(const Subspace<Rat>& s);  // its RREF basis rows
Subspace<Rat> subspace_from_json(const json& j, std::size_t ambient);

json binform_to_json(const BinForm<Rat>& f);    // {"deg": d, "coeffs": [...]}
BinForm<Rat> binform_from_json(const json& j);

json curve_to_json(const CurveFamily& c);       // {"rows": [[...5],[...5]]}
CurveFamily curve_from_json(const json& j);

json splitting_to_json(const SplittingType& t);

json fiber_report_to_json(const FiberReport& r);
json conic_report_to_json(const ConicReport& r);
json axis_locus_to_json(const AxisLocusModel& m);
json formspace_to_json(const FormSpace& f);
json enum_result_to_json(const EnumResult& r);
json check_results_to_json(const std::vector<CheckResult>& rs);

// Custom section file: {"name": "...", "covectors": [[10 rationals], ...]}
SectionModel section_from_json(const json& j);

// Canonical serialization used everywhere the CLI promises byte-identical
// output: 2-space indentation, keys in insertion order.
std::string dump_json(const json& j, bool pretty);

}  // namespace grascurve
