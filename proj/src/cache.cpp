#include "liefusion/cache.hpp"

#include <json.hpp>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace liefusion {

namespace {

using nlohmann::json;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

json weight_to_json(const Weight& w) { return json(w.labels); }

Weight weight_from_json(const json& j) { return Weight(j.get<std::vector<std::int64_t>>()); }

json sparse_to_json(const SparseMat& m) {
  json cols = json::array();
  for (std::size_t j = 0; j < m.size(); ++j) {
    json col = json::array();
    for (const auto& [row, val] : m.col(j)) col.push_back(json::array({row, to_string(val)}));
    cols.push_back(std::move(col));
  }
  return cols;
}

SparseMat sparse_from_json(const json& j) {
  SparseMat m(j.size());
  for (std::size_t c = 0; c < j.size(); ++c) {
    std::vector<std::pair<int, Rat>> entries;
    for (const auto& e : j[c]) entries.emplace_back(e[0].get<int>(), parse_rational(e[1].get<std::string>()));
    m.set_col(c, std::move(entries));
  }
  return m;
}

std::optional<json> read_entry(const CacheConfig& cfg, const std::string& file, const std::string& kind) {
  if (!cfg.enabled || cfg.dir.empty()) return std::nullopt;
  std::ifstream in(cfg.dir / file);
  if (!in) return std::nullopt;
  json doc;
  try {
    in >> doc;
    if (doc.value("version", "") != kCacheFormatVersion) return std::nullopt;
    if (doc.value("kind", "") != kind) return std::nullopt;
  } catch (const json::exception&) {
    return std::nullopt;
  }
  return doc;
}

// Atomic write: temp file in the same directory, then rename over the target.
void write_entry(const CacheConfig& cfg, const std::string& file, const json& doc) {
  if (!cfg.enabled || cfg.dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(cfg.dir, ec);
  if (ec) return;
  auto target = cfg.dir / file;
  auto tmp = cfg.dir / (file + ".tmp." + std::to_string(static_cast<unsigned long>(::getpid())));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << doc.dump();
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

CacheConfig CacheConfig::resolve(bool enabled, const std::string& flag_dir) {
  CacheConfig cfg;
  cfg.enabled = enabled;
  if (!enabled) return cfg;
  if (!flag_dir.empty()) {
    cfg.dir = flag_dir;
    return cfg;
  }
  if (const char* env = std::getenv(kCacheEnvVar); env && *env) {
    cfg.dir = env;
    return cfg;
  }
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    cfg.dir = std::filesystem::path(xdg) / "liefusion";
    return cfg;
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    cfg.dir = std::filesystem::path(home) / ".cache" / "liefusion";
    return cfg;
  }
  cfg.enabled = false;
  return cfg;
}

std::string cache_file_name(const std::string& kind, const LieType& type, const Weight& lambda) {
  std::string key = kind + ":" + type.name() + ":";
  for (auto v : lambda.labels) key += std::to_string(v) + ",";
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a(key)));
  return kind + "-" + type.name() + "-" + buf + ".json";
}

void store_weight_system(const CacheConfig& cfg, const LieType& type, const WeightSystem& ws) {
  json mults = json::array();
  for (const auto& [w, m] : ws.dominant_mults())
    mults.push_back(json::array({weight_to_json(w), to_string(m)}));
  json doc = {{"version", kCacheFormatVersion},
              {"kind", "weight-system"},
              {"type", type.name()},
              {"highest", weight_to_json(ws.highest_weight())},
              {"mults", std::move(mults)},
              {"total", to_string(ws.total_dim())}};
  write_entry(cfg, cache_file_name("weight-system", type, ws.highest_weight()), doc);
}

std::optional<WeightSystem> load_weight_system(const CacheConfig& cfg, const LieType& type,
                                               const Weight& lambda) {
  auto doc = read_entry(cfg, cache_file_name("weight-system", type, lambda), "weight-system");
  if (!doc) return std::nullopt;
  try {
    if (weight_from_json((*doc)["highest"]) != lambda) return std::nullopt;
    std::map<Weight, Int> mults;
    for (const auto& e : (*doc)["mults"]) mults[weight_from_json(e[0])] = Int(e[1].get<std::string>());
    return WeightSystem(lambda, std::move(mults), Int((*doc)["total"].get<std::string>()));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_module(const CacheConfig& cfg, const ExplicitModule& m) {
  const LieType& type = m.root_system().type();
  json basis = json::array();
  for (const auto& w : m.basis_weights()) basis.push_back(weight_to_json(w));
  json gram = json::array();
  for (const auto& g : m.gram_diagonal()) gram.push_back(to_string(g));
  json raising = json::array(), lowering = json::array();
  for (int i = 0; i < m.root_system().rank(); ++i) {
    raising.push_back(sparse_to_json(m.raising(i)));
    lowering.push_back(sparse_to_json(m.lowering(i)));
  }
  json doc = {{"version", kCacheFormatVersion}, {"kind", "module-skeleton"},
              {"type", type.name()},           {"highest", weight_to_json(m.highest_weight())},
              {"basis", std::move(basis)},     {"gram", std::move(gram)},
              {"raising", std::move(raising)}, {"lowering", std::move(lowering)}};
  write_entry(cfg, cache_file_name("module-skeleton", type, m.highest_weight()), doc);
}

std::optional<ExplicitModule> load_module(const CacheConfig& cfg, const RootSystem& R, const Weight& lambda) {
  auto doc = read_entry(cfg, cache_file_name("module-skeleton", R.type(), lambda), "module-skeleton");
  if (!doc) return std::nullopt;
  try {
    if (weight_from_json((*doc)["highest"]) != lambda) return std::nullopt;
    std::vector<Weight> basis;
    for (const auto& e : (*doc)["basis"]) basis.push_back(weight_from_json(e));
    std::vector<Rat> gram;
    for (const auto& e : (*doc)["gram"]) gram.push_back(parse_rational(e.get<std::string>()));
    std::vector<SparseMat> raising, lowering;
    for (const auto& e : (*doc)["raising"]) raising.push_back(sparse_from_json(e));
    for (const auto& e : (*doc)["lowering"]) lowering.push_back(sparse_from_json(e));
    return ExplicitModule::from_parts(R, lambda, std::move(basis), std::move(gram), std::move(raising),
                                      std::move(lowering));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

WeightSystem cached_weight_system(const CacheConfig& cfg, const RootSystem& R, const Weight& lambda) {
  if (auto hit = load_weight_system(cfg, R.type(), lambda)) return *hit;
  WeightSystem ws = weight_system(R, lambda);
  store_weight_system(cfg, R.type(), ws);
  return ws;
}

ExplicitModule cached_module(const CacheConfig& cfg, const RootSystem& R, const Weight& lambda,
                             const ModuleOptions& opts) {
  if (auto hit = load_module(cfg, R, lambda)) return std::move(*hit);
  ExplicitModule m = ExplicitModule::build(R, lambda, opts);
  store_module(cfg, m);
  return m;
}

}  // namespace liefusion
