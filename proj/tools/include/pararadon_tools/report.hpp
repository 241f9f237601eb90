#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "pararadon/residual.hpp"
#include "pararadon/sampled_field.hpp"

namespace pararadon::tools {

enum class ReportFormat { json, csv };

/// {"name", "grid": {"dim", "half_extent", "points"}, "errors": {"max_abs", "rel_l2"},
///  "tolerance", "pass", "seconds", "detail"}. Non-finite numbers are written
/// as the strings "NaN", "Infinity" and "-Infinity".
nlohmann::json to_json(const ResidualReport& r);
ResidualReport report_from_json(const nlohmann::json& j);

nlohmann::json grid_to_json(const GridSpec& g);
GridSpec grid_from_json(const nlohmann::json& j);

/// JSON: an array of reports. CSV: header
///   name,grid,max_abs,rel_l2,tolerance,pass,seconds,detail
/// with one row per report; text fields are quoted.
void emit_report(std::ostream& os, const std::vector<ResidualReport>& reports, ReportFormat format);
void emit_report(const std::filesystem::path& path, const std::vector<ResidualReport>& reports,
                 ReportFormat format);

std::vector<ResidualReport> parse_report_json(const std::string& text);

/// Binary field dump:
///   8 bytes   "PRFIELD1"
///   uint64    header length in bytes (little endian)
///   header    JSON {"grid": {...}, "domain": "space"|"frequency", "meta": {...}}
///   values    size() pairs of little-endian float64 (re, im), row-major,
///             last axis fastest
void write_field(const std::filesystem::path& path, const SampledField& f,
                 const nlohmann::json& meta = nlohmann::json::object());

struct FieldFile {
  SampledField field;
  nlohmann::json meta;
};

FieldFile read_field(const std::filesystem::path& path);

}  // namespace pararadon::tools
