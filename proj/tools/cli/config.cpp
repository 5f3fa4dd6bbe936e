#include "cli/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "mvrp/error.hpp"

namespace mvrp::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw UsageError("bad value '" + value + "' for " + key);
  }
  return out;
}

template <class T>
std::vector<T> parse_list(const std::string& value, const std::function<T(const std::string&)>& one) {
  std::vector<T> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(one(item));
  }
  return out;
}

Algorithm parse_algorithm_usage(const std::string& value) {
  try {
    return parse_algorithm(value);
  } catch (const InvalidParameter& e) {
    throw UsageError(e.what());
  }
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"seed", [](RunConfig& c, const auto& k, const auto& v) { c.seed = parse_number<std::uint64_t>(k, v); }},
      {"out_dir", [](RunConfig& c, const auto&, const auto& v) { c.out_dir = v; }},
      {"instance", [](RunConfig& c, const auto&, const auto& v) { c.instance_path = v; }},
      {"gen.n", [](RunConfig& c, const auto& k, const auto& v) { c.generator.n = parse_number<std::size_t>(k, v); }},
      {"gen.side", [](RunConfig& c, const auto& k, const auto& v) { c.generator.side = parse_number<double>(k, v); }},
      {"gen.depot", [](RunConfig& c, const auto& k, const auto& v) { c.generator.depot_index = parse_number<std::size_t>(k, v); }},
      {"k", [](RunConfig& c, const auto& k, const auto& v) { c.k = parse_number<std::size_t>(k, v); }},
      {"algorithm", [](RunConfig& c, const auto&, const auto& v) { c.algorithm = parse_algorithm_usage(v); }},
      {"threads", [](RunConfig& c, const auto& k, const auto& v) { c.threads = parse_number<std::size_t>(k, v); }},
      {"kmeans.restarts", [](RunConfig& c, const auto& k, const auto& v) { c.kmeans_restarts = parse_number<std::size_t>(k, v); }},
      {"kmeans.max_iter", [](RunConfig& c, const auto& k, const auto& v) { c.kmeans_max_iter = parse_number<std::size_t>(k, v); }},
      {"kmeans.init", [](RunConfig& c, const auto& k, const auto& v) {
         if (v == "farthest") c.kmeans_init = CentroidInit::kFarthest;
         else if (v == "random") c.kmeans_init = CentroidInit::kRandom;
         else throw UsageError("bad value '" + v + "' for " + k + " (farthest|random)");
       }},
      {"ga.population_size", [](RunConfig& c, const auto& k, const auto& v) { c.router.ga.population_size = parse_number<std::size_t>(k, v); }},
      {"ga.mating_pool_size", [](RunConfig& c, const auto& k, const auto& v) { c.router.ga.mating_pool_size = parse_number<std::size_t>(k, v); }},
      {"ga.crossover_prob", [](RunConfig& c, const auto& k, const auto& v) { c.router.ga.crossover_prob = parse_number<double>(k, v); }},
      {"ga.mutation_prob", [](RunConfig& c, const auto& k, const auto& v) { c.router.ga.mutation_prob = parse_number<double>(k, v); }},
      {"ga.max_generations", [](RunConfig& c, const auto& k, const auto& v) { c.router.ga.max_generations = parse_number<std::size_t>(k, v); }},
      {"ga.stall_generations", [](RunConfig& c, const auto& k, const auto& v) { c.router.ga.stall_generations = parse_number<std::size_t>(k, v); }},
      {"ga.mutation", [](RunConfig& c, const auto& k, const auto& v) {
         if (v == "swap") c.router.ga.mutation = MutationOp::kSwap;
         else if (v == "inversion") c.router.ga.mutation = MutationOp::kInversion;
         else throw UsageError("bad value '" + v + "' for " + k + " (swap|inversion)");
       }},
      {"sa.initial_temp", [](RunConfig& c, const auto& k, const auto& v) { c.router.sa.initial_temp = parse_number<double>(k, v); }},
      {"sa.cooling_rate", [](RunConfig& c, const auto& k, const auto& v) { c.router.sa.cooling_rate = parse_number<double>(k, v); }},
      {"sa.steps_per_temp", [](RunConfig& c, const auto& k, const auto& v) { c.router.sa.steps_per_temp = parse_number<std::size_t>(k, v); }},
      {"sa.min_temp", [](RunConfig& c, const auto& k, const auto& v) { c.router.sa.min_temp = parse_number<double>(k, v); }},
      {"tabu.tenure", [](RunConfig& c, const auto& k, const auto& v) { c.router.tabu.tenure = parse_number<std::size_t>(k, v); }},
      {"tabu.max_iterations", [](RunConfig& c, const auto& k, const auto& v) { c.router.tabu.max_iterations = parse_number<std::size_t>(k, v); }},
      {"exact.cap", [](RunConfig& c, const auto& k, const auto& v) { c.router.exact_cap = parse_number<std::size_t>(k, v); }},
      {"bench.algorithms", [](RunConfig& c, const auto&, const auto& v) {
         c.bench_algorithms = parse_list<Algorithm>(v, parse_algorithm_usage);
       }},
      {"bench.seeds", [](RunConfig& c, const auto& k, const auto& v) {
         c.bench_seeds = parse_list<std::uint64_t>(v, [&](const std::string& s) { return parse_number<std::uint64_t>(k, s); });
       }},
  };
  return table;
}

}  // namespace

KMeansParams RunConfig::kmeans_params() const {
  KMeansParams p;
  p.k = k;
  p.seed = clustering_seed(seed);
  p.max_iter = kmeans_max_iter;
  p.restarts = kmeans_restarts;
  p.init = kmeans_init;
  return p;
}

void RunConfig::validate() const {
  if (k < 1) throw InvalidParameter("k must be at least 1");
  if (kmeans_restarts < 1) throw InvalidParameter("kmeans.restarts must be at least 1");
  if (threads < 1) throw InvalidParameter("threads must be at least 1");
  router.ga.validate();
}

void apply_override(RunConfig& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw UsageError("expected key=value, got '" + assignment + "'");
  const std::string key = trim(assignment.substr(0, eq));
  const std::string value = trim(assignment.substr(eq + 1));
  auto it = setters().find(key);
  if (it == setters().end()) throw UsageError("unknown config key '" + key + "'");
  it->second(config, key, value);
}

void load_config_file(RunConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    try {
      apply_override(config, line);
    } catch (const UsageError& e) {
      throw UsageError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

std::string to_string(CentroidInit init) {
  return init == CentroidInit::kFarthest ? "farthest" : "random";
}

std::string to_string(MutationOp op) { return op == MutationOp::kSwap ? "swap" : "inversion"; }

}  // namespace mvrp::cli
