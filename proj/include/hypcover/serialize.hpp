#pragma once

#include <json.hpp>

#include "hypcover/covering.hpp"
#include "hypcover/curve.hpp"
#include "hypcover/finite_cover.hpp"
#include "hypcover/probe.hpp"
#include "hypcover/unimat.hpp"

namespace hypcover {

using Json = nlohmann::ordered_json;

/// [[a, b], [c, d]] with "p/q" strings.
Json to_json(const UniMat& m);
/// Accepts the to_json form; entries may also be JSON integers.
UniMat unimat_from_json(const Json& j);

Json to_json(const IntPair& v);
Json to_json(const RatEigen& e);
Json to_json(const DioPair& p);
Json to_json(const ProbeRow& row);
Json to_json(const Gamma2Report& r);
Json to_json(const ValidationReport& r);

/// Summary without the record list (terminal values, counts).
Json summary_json(const CurveReport& r);

/// {"d": [[...]], "perms": [[...], ...]}
Json to_json(const FiniteModel& model);
FiniteModel finite_model_from_json(const Json& j);

/// n,m,ratio,log_error,order,dist_to_C
std::string probe_csv(const std::vector<ProbeRow>& rows);

}  // namespace hypcover
