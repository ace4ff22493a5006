#pragma once

#include <string>
#include <vector>

#include "r2k/derivation_json.hpp"
#include "r2k/gamma.hpp"

namespace r2k {

/// Run configuration, read from a JSON file:
/// {"rank": 1, "mode": "rational", "generators": ["1"], "window": 4, "format": "json"}
struct Config {
  std::size_t rank = 1;
  std::string mode = "rational";  // or "generic"
  std::vector<std::string> generators{"1"};
  std::int64_t window = 4;
  std::string format = "json";  // or "text"

  /// Γ = Z with generator 1, window 4, JSON output.
  static Config defaults() { return {}; }

  /// Throws InvalidArgument unless the mode invariants hold: rational mode
  /// has rank 1 and one nonzero rational generator, generic mode has exactly
  /// u1..ur.
  void validate() const;
  GammaEmbedding embedding() const;
};

Config config_from_json(const Json& j);
Json config_to_json(const Config& c);

/// Reads and validates a config file. Throws InvalidArgument when the file is
/// missing or malformed.
Config load_config(const std::string& path);

}  // namespace r2k
