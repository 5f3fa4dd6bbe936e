#pragma once

#include <string>
#include <string_view>

#include "mvrp/clustering.hpp"
#include "mvrp/instance.hpp"

namespace mvrp::cli {

/// Lower-case hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

/// SHA-256 of the instance's canonical file text.
std::string instance_digest(const Instance& inst);

/// First 16 hex digits of the SHA-256 over "k\n" and one "<id> <label>"
/// line per clustered city.
std::string clustering_digest(const ClusterAssignment& clustering);

}  // namespace mvrp::cli
