#include "cli/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "mvrp/error.hpp"

namespace mvrp::cli {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string fmt_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string convergence_svg(const Trace& trace, const std::string& title) {
  if (trace.empty()) throw ParseError(1, "cannot plot an empty trace");
  constexpr double kWidth = 800.0, kHeight = 500.0;
  constexpr double kLeft = 70.0, kRight = 20.0, kTop = 40.0, kBottom = 50.0;

  const double x0 = static_cast<double>(trace.front().step);
  const double x1 = static_cast<double>(trace.back().step);
  double lo = trace.front().best_length, hi = lo;
  for (const TraceRow& r : trace) {
    lo = std::min({lo, r.best_length, r.mean_length});
    hi = std::max({hi, r.best_length, r.mean_length});
  }
  const double xspan = x1 > x0 ? x1 - x0 : 1.0;
  const double yspan = hi > lo ? hi - lo : 1.0;
  auto px = [&](double step) { return kLeft + (step - x0) / xspan * (kWidth - kLeft - kRight); };
  auto py = [&](double len) { return kHeight - kBottom - (len - lo) / yspan * (kHeight - kTop - kBottom); };

  auto points = [&](bool best) {
    std::string s;
    for (const TraceRow& r : trace) {
      if (!s.empty()) s += ' ';
      s += fmt(px(static_cast<double>(r.step))) + ',' + fmt(py(best ? r.best_length : r.mean_length));
    }
    return s;
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" viewBox=\"0 0 800 500\">\n"
      << "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n"
      << "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
      << escape(title) << "</text>\n"
      << "<line class=\"axis\" x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kHeight - kBottom) << "\" x2=\""
      << fmt(kWidth - kRight) << "\" y2=\"" << fmt(kHeight - kBottom) << "\" stroke=\"black\"/>\n"
      << "<line class=\"axis\" x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(kLeft)
      << "\" y2=\"" << fmt(kHeight - kBottom) << "\" stroke=\"black\"/>\n"
      << "<text x=\"400\" y=\"490\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">generation</text>\n"
      << "<text x=\"" << fmt(kLeft - 6) << "\" y=\"" << fmt(kHeight - kBottom) << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
      << fmt_label(lo) << "</text>\n"
      << "<text x=\"" << fmt(kLeft - 6) << "\" y=\"" << fmt(kTop + 4) << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
      << fmt_label(hi) << "</text>\n"
      << "<text x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kHeight - kBottom + 16) << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
      << trace.front().step << "</text>\n"
      << "<text x=\"" << fmt(kWidth - kRight) << "\" y=\"" << fmt(kHeight - kBottom + 16) << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
      << trace.back().step << "</text>\n"
      << "<polyline class=\"mean\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\" points=\"" << points(false) << "\"/>\n"
      << "<polyline class=\"best\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"" << points(true) << "\"/>\n"
      << "</svg>\n";
  return out.str();
}

std::string route_map_svg(const Instance& inst, const std::vector<std::vector<CityId>>& tours) {
  double minx = inst.cities().front().x, maxx = minx;
  double miny = inst.cities().front().y, maxy = miny;
  for (const City& c : inst.cities()) {
    minx = std::min(minx, c.x);
    maxx = std::max(maxx, c.x);
    miny = std::min(miny, c.y);
    maxy = std::max(maxy, c.y);
  }
  const double span = std::max({maxx - minx, maxy - miny, 1e-12});
  const double scale = (kRouteMapSize - 2 * kRouteMapMargin) / span;
  auto px = [&](double x) { return kRouteMapMargin + (x - minx) * scale; };
  auto py = [&](double y) { return kRouteMapSize - kRouteMapMargin - (y - miny) * scale; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n"
      << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  const City& depot = inst.depot();
  for (std::size_t v = 0; v < tours.size(); ++v) {
    std::string pts = fmt(px(depot.x)) + ',' + fmt(py(depot.y));
    for (CityId id : tours[v]) {
      const City& c = inst.city(id);
      pts += ' ' + fmt(px(c.x)) + ',' + fmt(py(c.y));
    }
    pts += ' ' + fmt(px(depot.x)) + ',' + fmt(py(depot.y));
    out << "<polyline class=\"route\" data-vehicle=\"" << v + 1 << "\" fill=\"none\" stroke=\""
        << kPalette[v % std::size(kPalette)] << "\" stroke-width=\"1.5\" points=\"" << pts << "\"/>\n";
  }
  for (const City& c : inst.cities()) {
    if (c.id == inst.depot_id()) continue;
    out << "<circle class=\"city\" data-id=\"" << c.id << "\" cx=\"" << fmt(px(c.x)) << "\" cy=\""
        << fmt(py(c.y)) << "\" r=\"3\" fill=\"black\"/>\n";
  }
  out << "<rect class=\"depot\" data-id=\"" << depot.id << "\" x=\"" << fmt(px(depot.x) - 6) << "\" y=\""
      << fmt(py(depot.y) - 6) << "\" width=\"12\" height=\"12\" fill=\"red\"/>\n"
      << "</svg>\n";
  return out.str();
}

}  // namespace mvrp::cli
