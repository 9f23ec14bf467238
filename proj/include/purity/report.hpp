#pragma once

// CSV / JSON emission for sweeps and reports.

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "purity/oracle.hpp"
#include "purity/scan.hpp"

namespace purity {

inline constexpr int kSchemaVersion = 1;

/// Fixed sweep column order.
const std::vector<std::string>& csv_columns();

/// 17 significant digits as printf %.17g would give, "." separator regardless of locale.
std::string format_number(double x);

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows, bool with_inequality_terms = false);

nlohmann::json to_json(const GridSpec& spec);
nlohmann::json to_json(const InterferometerConfig& config);
nlohmann::json row_json(const SweepRow& row);

/// {"header": {"schema_version", "command", "grid"}, "rows": [...]}
void write_json(std::ostream& os, const std::string& command, const GridSpec& spec, const std::vector<SweepRow>& rows);

nlohmann::json to_json(const AuditReport& report);
nlohmann::json to_json(const RecreationResult& result);
nlohmann::json to_json(const OracleReport& report);

}  // namespace purity
