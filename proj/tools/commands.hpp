#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "abundant/criteria.hpp"
#include "abundant/generators.hpp"
#include "abundant/interval.hpp"
#include "abundant/properties.hpp"

namespace abundant::cli {

struct RunConfig {
  mpfr_prec_t precision_bits = kBasePrecision;
  std::uint64_t sieve_limit = 10'000'000;
  double max_log = 160;
  std::filesystem::path cache_dir;  // empty: no caching
  ReportFormat format = ReportFormat::Text;
  Notation notation = Notation::Primorial;
  std::vector<std::filesystem::path> inputs;

  /// Throws DomainError on out-of-range fields.
  void validate() const;
};

ReportFormat parse_format(const std::string& s);
Notation parse_notation(const std::string& s);

/// A named table; cells are JSON scalars so every format renders the same data.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::ordered_json>> rows;
};

struct Document {
  std::vector<Table> tables;
  std::vector<std::string> notes;  // emitted as comments (or a "notes" array)
};

void render(const Document& doc, ReportFormat format, std::ostream& out);

/// Exit status follows the contract 0 pass, 1 violation, 2 precision or
/// resource error.
struct Outcome {
  Document doc;
  int status = 0;
};

ClassifiedList load_sa(const RunConfig& cfg);
const PrimeTables& tables(const RunConfig& cfg, std::uint64_t need);

Outcome cmd_generate(const RunConfig& cfg, const std::string& kind,
                     std::optional<std::size_t> ca_count,
                     const std::optional<std::filesystem::path>& export_path);
Outcome cmd_check(const RunConfig& cfg, const std::string& criterion, std::uint64_t from,
                  std::uint64_t to);
Outcome cmd_bounds(const RunConfig& cfg, const std::vector<std::string>& ids, std::uint64_t from,
                   std::uint64_t to);
Outcome cmd_properties(const RunConfig& cfg, const std::vector<std::string>& ids,
                       Population population, bool show_violations);
Outcome cmd_remarks(const RunConfig& cfg);
Outcome cmd_stats(const RunConfig& cfg);
Outcome cmd_oracle(const RunConfig& cfg, const std::string& kind, std::uint64_t limit);
Outcome cmd_table1(const RunConfig& cfg);

}  // namespace abundant::cli
