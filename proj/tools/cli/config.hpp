#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvrp/clustering.hpp"
#include "mvrp/pipeline.hpp"

namespace mvrp::cli {

/// Bad command-line or config input; mapped to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GeneratorSpec {
  std::size_t n = 180;
  double side = 35.0;
  std::size_t depot_index = 100;
};

struct RunConfig {
  /// When unset the instance comes from `generator` seeded with `seed`.
  std::optional<std::filesystem::path> instance_path;
  GeneratorSpec generator;
  std::size_t k = 6;
  Algorithm algorithm = Algorithm::kGa;
  std::size_t kmeans_restarts = 10;
  std::size_t kmeans_max_iter = 100;
  CentroidInit kmeans_init = CentroidInit::kFarthest;
  RouterParams router;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir = ".";
  std::size_t threads = 1;

  // bench only
  std::vector<Algorithm> bench_algorithms{Algorithm::kGa, Algorithm::kSa, Algorithm::kTabu};
  std::vector<std::uint64_t> bench_seeds{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};

  KMeansParams kmeans_params() const;
  /// Throws InvalidParameter on inconsistent values.
  void validate() const;
};

/// Apply one `key=value` override. Throws UsageError on an unknown key or a
/// value that does not parse.
void apply_override(RunConfig& config, const std::string& assignment);

/// Apply every `key=value` line of a file; blank lines and lines starting
/// with '#' are skipped.
void load_config_file(RunConfig& config, const std::filesystem::path& path);

std::string to_string(CentroidInit init);
std::string to_string(MutationOp op);

}  // namespace mvrp::cli
