#include "oig/instance.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oig {

std::string_view to_string(PrizeScheme scheme) { return scheme == PrizeScheme::Unit ? "u" : "r"; }

PrizeScheme parse_prize_scheme(std::string_view s) {
  if (s == "u" || s == "unit") return PrizeScheme::Unit;
  if (s == "r" || s == "random") return PrizeScheme::Random;
  throw std::invalid_argument("unknown prize scheme '" + std::string(s) + "' (expected u or r)");
}

std::int64_t Instance::total_prize() const {
  std::int64_t sum = 0;
  for (int i = 0; i < n; ++i) sum += collectible(i);
  return sum;
}

void Instance::validate() const {
  if (n < 3) throw std::invalid_argument("instance needs at least 3 nodes");
  if (dist.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("distance matrix size mismatch");
  if (prizes.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("prize vector size mismatch");
  if (depot < 0 || depot >= n) throw std::invalid_argument("depot out of range");
  if (distance_budget < 0 || interdiction_budget < 0) throw std::invalid_argument("negative budget");
  for (int i = 0; i < n; ++i) {
    if (prizes[i] <= 0) throw std::invalid_argument("prizes must be positive");
    if (d(i, i) != 0) throw std::invalid_argument("nonzero diagonal distance");
    for (int j = i + 1; j < n; ++j)
      if (d(i, j) != d(j, i) || d(i, j) < 0) throw std::invalid_argument("distances must be symmetric and nonnegative");
  }
}

Interdiction Interdiction::from_nodes(int n, std::span<const int> nodes) {
  Interdiction z(n);
  for (int v : nodes) z.set(v);
  return z;
}

int Interdiction::count() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<int> Interdiction::nodes() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if ((*this)[i]) out.push_back(i);
  return out;
}

std::vector<double> Interdiction::as_doubles() const {
  std::vector<double> out(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = bits_[i];
  return out;
}

std::vector<double> collectible_prizes(const Instance& inst, const Interdiction& z) {
  std::vector<double> w(static_cast<std::size_t>(inst.n));
  for (int i = 0; i < inst.n; ++i) w[i] = z[i] ? 0.0 : static_cast<double>(inst.collectible(i));
  return w;
}

std::vector<double> collectible_prizes(const Instance& inst, std::span<const double> z) {
  std::vector<double> w(static_cast<std::size_t>(inst.n));
  for (int i = 0; i < inst.n; ++i) w[i] = static_cast<double>(inst.collectible(i)) * (1.0 - z[i]);
  return w;
}

std::int64_t random_prize(int tsplib_index) { return 1 + (7141LL * tsplib_index + 73) % 100; }

Instance build_instance(const RawTsp& raw, PrizeScheme scheme, int interdiction_budget,
                        Rational budget_factor, int depot, std::int64_t tsp_optimum) {
  if (interdiction_budget < 0) throw std::domain_error("interdiction budget must be nonnegative");
  if (budget_factor.num <= 0 || budget_factor.den <= 0) throw std::domain_error("budget factor must be positive");
  if (tsp_optimum <= 0) throw std::domain_error("TSP optimum must be positive");
  if (depot < 0 || depot >= raw.dimension) throw std::domain_error("depot out of range");

  const int n = raw.dimension;
  Instance inst;
  inst.name = raw.name;
  inst.scheme = scheme;
  inst.n = n;
  inst.dist.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::int64_t w = edge_weight(raw, i, j);
      inst.dist[static_cast<std::size_t>(i) * n + j] = w;
      inst.dist[static_cast<std::size_t>(j) * n + i] = w;
    }
  inst.prizes.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inst.prizes[i] = scheme == PrizeScheme::Unit ? 1 : random_prize(i + 1);
  inst.depot = depot;
  inst.tsp_optimum = tsp_optimum;
  inst.distance_budget = budget_factor.num * tsp_optimum / budget_factor.den;
  inst.interdiction_budget = interdiction_budget;
  inst.validate();
  return inst;
}

Instance make_instance(std::string name, int n, std::vector<std::int64_t> dist,
                       std::vector<std::int64_t> prizes, int depot,
                       std::int64_t distance_budget, int interdiction_budget,
                       std::int64_t tsp_optimum) {
  Instance inst;
  inst.name = std::move(name);
  inst.n = n;
  inst.dist = std::move(dist);
  inst.prizes = std::move(prizes);
  inst.depot = depot;
  inst.distance_budget = distance_budget;
  inst.interdiction_budget = interdiction_budget;
  inst.tsp_optimum = tsp_optimum;
  inst.scheme = std::all_of(inst.prizes.begin(), inst.prizes.end(), [](auto p) { return p == 1; })
                    ? PrizeScheme::Unit
                    : PrizeScheme::Random;
  inst.validate();
  return inst;
}

std::string write_instance(const Instance& inst) {
  std::ostringstream out;
  out << "OIG_INSTANCE 1\n";
  out << "NAME " << inst.name << "\n";
  out << "SCHEME " << to_string(inst.scheme) << "\n";
  out << "N " << inst.n << "\n";
  out << "DEPOT " << inst.depot + 1 << "\n";
  out << "DISTANCE_BUDGET " << inst.distance_budget << "\n";
  out << "INTERDICTION_BUDGET " << inst.interdiction_budget << "\n";
  out << "TSP_OPTIMUM " << inst.tsp_optimum << "\n";
  out << "COLLECT_DEPOT " << (inst.collect_depot ? 1 : 0) << "\n";
  out << "PRIZES\n";
  for (int i = 0; i < inst.n; ++i) out << (i ? " " : "") << inst.prizes[i];
  out << "\nDISTANCES\n";
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.n; ++j) out << (j ? " " : "") << inst.d(i, j);
    out << "\n";
  }
  out << "END\n";
  return out.str();
}

Instance read_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  auto fail = [](const std::string& msg) -> Instance { throw std::runtime_error("instance file: " + msg); };
  std::string key;
  in >> key;
  if (key != "OIG_INSTANCE") return fail("missing OIG_INSTANCE header");
  int version = 0;
  in >> version;
  if (version != 1) return fail("unsupported version");

  Instance inst;
  bool have_n = false;
  while (in >> key) {
    if (key == "NAME") in >> inst.name;
    else if (key == "SCHEME") {
      std::string s;
      in >> s;
      inst.scheme = parse_prize_scheme(s);
    } else if (key == "N") {
      in >> inst.n;
      have_n = true;
    } else if (key == "DEPOT") {
      in >> inst.depot;
      inst.depot -= 1;
    } else if (key == "DISTANCE_BUDGET") in >> inst.distance_budget;
    else if (key == "INTERDICTION_BUDGET") in >> inst.interdiction_budget;
    else if (key == "TSP_OPTIMUM") in >> inst.tsp_optimum;
    else if (key == "COLLECT_DEPOT") in >> inst.collect_depot;
    else if (key == "PRIZES") {
      if (!have_n) return fail("PRIZES before N");
      inst.prizes.resize(static_cast<std::size_t>(inst.n));
      for (auto& p : inst.prizes) in >> p;
    } else if (key == "DISTANCES") {
      if (!have_n) return fail("DISTANCES before N");
      inst.dist.resize(static_cast<std::size_t>(inst.n) * inst.n);
      for (auto& d : inst.dist) in >> d;
    } else if (key == "END") {
      break;
    } else {
      return fail("unknown key '" + key + "'");
    }
    if (!in) return fail("malformed value after " + key);
  }
  if (key != "END") return fail("missing END");
  inst.validate();
  return inst;
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << write_instance(inst);
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return read_instance(ss.str());
}

NuTable NuTable::parse(std::string_view text) {
  NuTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) continue;
    std::int64_t value = 0;
    if (!(ls >> value) || value <= 0)
      throw std::runtime_error("nu table line " + std::to_string(line_no) + ": expected 'name positive-integer'");
    table.values_[name] = value;
  }
  return table;
}

NuTable NuTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open nu table " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::optional<std::int64_t> NuTable::find(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

}  // namespace oig
