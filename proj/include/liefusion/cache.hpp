#pragma once

#include "liefusion/explicit_module.hpp"
#include "liefusion/weight_system.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace liefusion {

inline constexpr const char* kCacheFormatVersion = "1";
inline constexpr const char* kCacheEnvVar = "LIEFUSION_CACHE_DIR";

struct CacheConfig {
  bool enabled = true;
  std::filesystem::path dir;

  // Resolution order: explicit flag, then the environment variable, then
  // $XDG_CACHE_HOME/liefusion or ~/.cache/liefusion. An empty result
  // disables persistence.
  static CacheConfig resolve(bool enabled, const std::string& flag_dir);
};

// Stable filename for a cache key; hash keeps names short and unambiguous.
std::string cache_file_name(const std::string& kind, const LieType& type, const Weight& lambda);

// Weight-system entries. load returns nullopt on miss, version mismatch, or
// unreadable payload (all treated as a recompute).
void store_weight_system(const CacheConfig& cfg, const LieType& type, const WeightSystem& ws);
std::optional<WeightSystem> load_weight_system(const CacheConfig& cfg, const LieType& type,
                                               const Weight& lambda);

// Module-skeleton entries (basis weights, Gram diagonal, simple generators).
void store_module(const CacheConfig& cfg, const ExplicitModule& m);
std::optional<ExplicitModule> load_module(const CacheConfig& cfg, const RootSystem& R, const Weight& lambda);

// Compute-or-load conveniences used by the CLI.
WeightSystem cached_weight_system(const CacheConfig& cfg, const RootSystem& R, const Weight& lambda);
ExplicitModule cached_module(const CacheConfig& cfg, const RootSystem& R, const Weight& lambda,
                             const ModuleOptions& opts = {});

}  // namespace liefusion
