#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "flagslice/combinatorics.hpp"
#include "flagslice/error.hpp"
#include "flagslice/homology.hpp"
#include "flagslice/orbit.hpp"

namespace flagslice {

enum class Command { enumerate, points, count, homology, verify };
enum class OutputFormat { json, csv };

Command parse_command(const std::string& text);
std::string to_string(Command command);

// Raised for incompatible or malformed run settings (exit code 2).
class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct RunConfig {
  Command command = Command::enumerate;
  RealForm form = RealForm::slnr;
  std::optional<int> n, p, q;
  std::optional<std::string> dims;
  // Sign sequence "(-+)(++)" / "-++-", or a:b cumulative-free block counts "1,2:1,1".
  std::optional<std::string> orbit;
  OutputFormat format = OutputFormat::json;
  std::uint64_t seed = 1;
  std::string inject_fault;
};

// Checked and completed view of a RunConfig.
struct ResolvedConfig {
  RunConfig raw;
  int n = 0, p = 0, q = 0;
  DimensionSequence dims;
  std::optional<OrbitDescriptor> orbit;
};
ResolvedConfig resolve(const RunConfig& cfg);

enum class CellKind { text, integer, json };
struct Column {
  std::string name;
  CellKind kind = CellKind::text;
};
struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<nlohmann::json>> rows;
  nlohmann::json context;
};

Table cmd_enumerate(const ResolvedConfig& cfg);
Table cmd_points(const ResolvedConfig& cfg);
Table cmd_count(const ResolvedConfig& cfg);
HomologyExpansion cmd_homology(const ResolvedConfig& cfg);

std::string render_json(const Table& table);
std::string render_csv(const Table& table);
// Inverse of render_csv given the column kinds.
std::vector<std::vector<nlohmann::json>> parse_csv(const std::string& text, const std::vector<Column>& columns);

struct RunResult {
  int exit_code = 0;
  std::string output;
};
// Exit codes: 0 ok, 2 config error, 3 verification failure.
RunResult run(const RunConfig& cfg);

}  // namespace flagslice
