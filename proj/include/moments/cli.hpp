#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace moments::cli {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { json, csv };

inline constexpr unsigned kDefaultPrecisionBits = 256;

struct RunConfig {
  std::string command;
  /// Only keys listed by parameter_specs(command); missing keys take defaults.
  std::map<std::string, std::string> parameters;
  std::uint64_t seed = 0;
  unsigned precision_bits = kDefaultPrecisionBits;
  OutputFormat output_format = OutputFormat::json;
  std::optional<std::string> output_path;
};

enum class ParamKind { integer, real, text };

struct ParamSpec {
  std::string key;
  ParamKind kind;
  std::string default_value;
  std::string help;
};

const std::vector<std::string>& verbs();
/// UsageError for an unknown verb.
const std::vector<ParamSpec>& parameter_specs(const std::string& verb);

/// 256 unless MOMENTS_PRECISION_BITS is set; UsageError if it is not a count >= 64.
unsigned default_precision_bits();

struct Report {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::vector<double> value;
  bool value_is_array = false;
  std::optional<double> reference;
  std::optional<double> rel_error;
  std::optional<double> std_error;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
  unsigned precision_bits = kDefaultPrecisionBits;
  double elapsed_ms = 0;
  bool pass = false;
};

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 tolerance failure
  Report report;
};

/// UsageError for unknown verbs or keys and malformed values.
RunResult run(const RunConfig& config);

nlohmann::json to_json(const Report& report);
/// Header line and one data row. Array values are joined with ';'.
std::string to_csv(const Report& report);

/// Full command-line driver: parse, run, write the report. Returns the exit status.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace moments::cli
