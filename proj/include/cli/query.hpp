#pragma once

#include "realform/catalog.hpp"

#include <json.hpp>

#include <string>

namespace cli {

/// Usage-level problem: malformed document, unknown flag, missing file.
class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_validation = 2;
constexpr int exit_defect = 3;

struct QueryOutcome {
    nlohmann::ordered_json report;
    int exit_code = exit_ok;
};

/// Execute a query document against the catalog.  Per-request failures are
/// recorded in the report without aborting the other requests; the exit code
/// is the worst severity seen.  Throws usage_error only for malformed input.
QueryOutcome run_query(const nlohmann::json& input, const realform::Catalog& catalog);

/// Render a machine report as a human-readable text block.
std::string report_to_text(const nlohmann::ordered_json& report);

/// Catalog listing, stable order.
nlohmann::ordered_json list_catalog(const realform::Catalog& catalog);
std::string catalog_to_text(const nlohmann::ordered_json& listing);

}  // namespace cli
