#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>

#include "wrtk/asymptotics.hpp"

namespace wrtk {

inline constexpr const char* tool_version = "0.1.0";

// Exact integers and rationals are serialized as strings; floating values as
// decimal strings with the precision recorded alongside.
nlohmann::json to_json(const ComplexValue& v);
nlohmann::json to_json(const PhaseUnit& p);
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const SeifertData& s);
nlohmann::json spec_json(const SurgerySpec& spec);
nlohmann::json to_json(const TauValue& t);
nlohmann::json to_json(const ExpansionReport& rep, const SurgerySpec& spec);
nlohmann::json to_json(const SweepResult& sweep);

// wraps a payload with {"spec": .., "precision_bits": .., "tool_version": ..}
nlohmann::json with_envelope(const SurgerySpec& spec, int precision_bits, nlohmann::json payload);

std::string sweep_csv(const SweepResult& sweep);
std::string expansion_csv_row(const ExpansionReport& rep);

// invariant table: h,k,l,class,cs_plus,cs_minus,t_plus,t_minus
std::string invariant_table_csv(const SurgerySpec& spec);

std::string labels_csv(const std::vector<IrrepLabel>& labels);
std::string points_csv(const std::vector<LatticePoint>& points, const char* first_name);
nlohmann::json labels_json(const std::vector<IrrepLabel>& labels);
nlohmann::json points_json(const std::vector<LatticePoint>& points);

} // namespace wrtk
