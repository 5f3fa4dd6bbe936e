#include "mvrp/trace.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "mvrp/error.hpp"

namespace mvrp {

namespace {

constexpr const char* kTraceHeader = "generation,best_length,mean_length";

template <class T>
T parse_field(const std::string& field, std::size_t line_no) {
  T value{};
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line_no, "bad field '" + field + "'");
  }
  return value;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_trace_csv(const Trace& trace, std::ostream& out) {
  out << kTraceHeader << '\n';
  for (const TraceRow& row : trace) {
    out << row.step << ',' << format_double(row.best_length) << ','
        << format_double(row.mean_length) << '\n';
  }
}

void write_trace_csv(const Trace& trace, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write trace file " + path.string());
  write_trace_csv(trace, out);
  if (!out) throw IoError("write failed for " + path.string());
}

Trace parse_trace_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(1, "empty trace file");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTraceHeader) throw ParseError(1, "expected header '" + std::string(kTraceHeader) + "'");

  Trace trace;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos) {
      throw ParseError(line_no, "expected 3 comma-separated fields");
    }
    TraceRow row;
    row.step = parse_field<std::size_t>(line.substr(0, c1), line_no);
    row.best_length = parse_field<double>(line.substr(c1 + 1, c2 - c1 - 1), line_no);
    row.mean_length = parse_field<double>(line.substr(c2 + 1), line_no);
    trace.push_back(row);
  }
  if (trace.empty()) throw ParseError(line_no, "trace has no rows");
  return trace;
}

Trace read_trace_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open trace file " + path.string());
  return parse_trace_csv(in);
}

}  // namespace mvrp
