#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wordmap/fox.hpp"
#include "wordmap/symmetric_approx.hpp"

namespace wordmap::cli {

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::string command;
  std::string word;
  std::string target = "random";
  std::uint64_t n = 0;
  std::vector<std::uint64_t> ns;
  std::string samples = "20";
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";

  bool operator==(const RunConfig&) const = default;
};

struct ScanRow {
  std::uint64_t n = 0;
  std::uint64_t samples = 0;
  double mean = 0;
  Fraction max{0};
  Fraction bound{0};  // largest per-target bound in the cell
  std::optional<Fraction> oracle_max;  // sup of exact distances, exhaustive runs only

  bool operator==(const ScanRow&) const = default;
};

std::string fraction_str(const Fraction& f);
Fraction parse_fraction(const std::string& s);

nlohmann::ordered_json config_json(const RunConfig& c);
RunConfig config_from_json(const nlohmann::json& j);

nlohmann::ordered_json witness_record(const Witness& w, const RunConfig& c);
Witness witness_from_record(const nlohmann::json& j);
std::string witness_csv(const Witness& w, const RunConfig& c);

nlohmann::ordered_json su_record(const SUCertificate& s, const RunConfig& c);

// First line "# schema=<v> <config json>", then a header and one row per n.
std::string scan_csv(const std::vector<ScanRow>& rows, const RunConfig& c);
std::vector<ScanRow> scan_from_csv(const std::string& text, RunConfig* config = nullptr);
nlohmann::ordered_json scan_json(const std::vector<ScanRow>& rows, const RunConfig& c);

// Writes through a sibling temporary and renames over path.
void write_atomic(const std::string& path, const std::string& data);

}  // namespace wordmap::cli
