#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mvrp/instance.hpp"

namespace mvrp {

/// One convergence sample: GA generation, SA temperature level or tabu
/// iteration. `best_length` is the best-so-far; `mean_length` is the
/// population mean (GA) or the mean current-tour length over the step.
struct TraceRow {
  std::size_t step = 0;
  double best_length = 0.0;
  double mean_length = 0.0;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

using Trace = std::vector<TraceRow>;

/// Best tour found by a per-cluster optimizer.
struct TourResult {
  std::vector<CityId> tour;
  double length = 0.0;
  Trace trace;
};

/// CSV with header `generation,best_length,mean_length`; doubles are written
/// in shortest round-trip form.
void write_trace_csv(const Trace& trace, std::ostream& out);
void write_trace_csv(const Trace& trace, const std::filesystem::path& path);

/// Throws ParseError on a malformed or empty trace.
Trace parse_trace_csv(std::istream& in);
Trace read_trace_csv(const std::filesystem::path& path);

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

}  // namespace mvrp
