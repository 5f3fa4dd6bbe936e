#pragma once

#include <string>
#include <vector>

#include "mvrp/instance.hpp"
#include "mvrp/trace.hpp"

namespace mvrp::cli {

inline constexpr double kRouteMapSize = 800.0;
inline constexpr double kRouteMapMargin = 10.0;

/// Best-length convergence curve (polyline class "best") over the trace
/// steps, with the mean curve (class "mean") behind it. Throws ParseError on
/// an empty trace.
std::string convergence_svg(const Trace& trace, const std::string& title);

/// Fixed 800x800 map: one circle per city, a square depot marker, and per
/// vehicle a closed polyline (class "route") from the depot through the tour
/// back to the depot. The y axis points up.
std::string route_map_svg(const Instance& inst, const std::vector<std::vector<CityId>>& tours);

}  // namespace mvrp::cli
