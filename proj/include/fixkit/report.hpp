#pragma once

#include <string>

#include <json.hpp>

#include "fixkit/certifier.hpp"
#include "fixkit/diagram.hpp"
#include "fixkit/mapping.hpp"
#include "fixkit/relaxation.hpp"
#include "fixkit/solver.hpp"

namespace fixkit::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// 17 significant digits, the form used in every CSV cell.
std::string format_real(double v);

Json to_json(const Vector& v);
Json to_json(const Domain& d);
Json to_json(const Mapping& t);
Json to_json(const Witness& w);
Json to_json(const ClassCertificate& c);
Json to_json(const ConstantEstimate& e);
Json to_json(const LemmaReport& r);
Json to_json(const FixPreservationReport& r);
Json to_json(const SelfMapAudit& a);
Json to_json(const FejerAudit& a);
Json to_json(const Trajectory& traj);
Json to_json(const DiagramRow& row);
Json to_json(const DiagramReport& rep);

/// Header: iter,t_n,residual,dist_to_fix_<j>...,x_<i>...  t_n is the step
/// taken from x_n and is empty on the final row.
std::string trajectory_csv(const Trajectory& traj, const FixedPointSet& fix);

/// Header: mapping,NE,QNE,SPC,DC; cells are holds / violated / inapplicable.
std::string membership_csv(const DiagramReport& rep);

/// Header: class,verdict,constant,max_violation,witness_x,witness_y,lhs,rhs.
std::string certificates_csv(const DiagramRow& row);

}  // namespace fixkit::report
