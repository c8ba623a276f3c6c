#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leafnet/oracle.hpp"

namespace leafnet::cli {

enum class Format { Jsonl, Csv };
enum class Tier { Default, Extended };

struct SurveyRow {
  int order = 0;
  std::string filter;
  std::map<int, long> counts;  // fault cost -> number of graphs
  double wall_time = 0;
  std::string source;          // "internal-generator" or "external-stream"

  long total() const;
};

/// Fault-cost counts over every generated graph of order n passing the filter.
SurveyRow survey_internal(int n, const GraphClassFilter& filter, int threads);

/// Fault-cost counts over a graph6 stream; graphs rejected by the filter are
/// skipped, malformed lines are counted in `errors`.
SurveyRow survey_stream(std::istream& in, const GraphClassFilter& filter, int threads, long* errors = nullptr);

/// Empty when the fast ml and fault-cost code agree with brute force on g and
/// the per-graph invariants hold; otherwise what went wrong.
std::string oracle_disagreement(const Graph& g);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Agreement of the fast ml/fault-cost code with the brute-force oracle plus
/// the construction regression values. Extended adds order 8, cubic graphs up
/// to 12 vertices and the Petersen G_3.
std::vector<CheckResult> oracle_checks(Tier tier, int threads);

/// Command-line entry point: exit code 0 when every line succeeded, 2 when
/// some line produced an error record, 1 on fatal errors.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace leafnet::cli
