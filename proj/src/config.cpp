#include "r2k/config.hpp"

#include <fstream>

#include "r2k/error.hpp"

namespace r2k {

void Config::validate() const {
  if (rank == 0 || rank > kMaxVars)
    throw Error(ErrorCode::InvalidArgument, "rank must be between 1 and " + std::to_string(kMaxVars));
  if (generators.size() != rank)
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(rank) + " generators, got " +
                                                std::to_string(generators.size()));
  if (window < 1) throw Error(ErrorCode::InvalidArgument, "window must be at least 1");
  if (format != "json" && format != "text") throw Error(ErrorCode::InvalidArgument, "format must be json or text");
  if (mode == "rational") {
    if (rank != 1) throw Error(ErrorCode::InvalidArgument, "rational mode requires rank 1");
    const Scalar g = parse_scalar(generators[0], 0);
    if (g.is_zero()) throw Error(ErrorCode::InvalidArgument, "rational generator must be nonzero");
  } else if (mode == "generic") {
    for (std::size_t i = 0; i < rank; ++i) {
      if (parse_scalar(generators[i], rank) != Scalar::indeterminate(i))
        throw Error(ErrorCode::InvalidArgument, "generic generator " + std::to_string(i + 1) + " must be u" +
                                                    std::to_string(i + 1) + ", got '" + generators[i] + "'");
    }
  } else {
    throw Error(ErrorCode::InvalidArgument, "mode must be rational or generic, got '" + mode + "'");
  }
}

GammaEmbedding Config::embedding() const {
  validate();
  if (mode == "generic") return GammaEmbedding::generic(rank);
  return GammaEmbedding({parse_scalar(generators[0], 0)});
}

Config config_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "config must be a JSON object");
  Config c;
  try {
    if (j.contains("rank")) c.rank = j.at("rank").get<std::size_t>();
    if (j.contains("mode")) c.mode = j.at("mode").get<std::string>();
    if (j.contains("generators")) {
      c.generators.clear();
      for (const auto& g : j.at("generators")) {
        if (g.is_string())
          c.generators.push_back(g.get<std::string>());
        else if (g.is_number_integer())
          c.generators.push_back(std::to_string(g.get<std::int64_t>()));
        else
          throw Error(ErrorCode::InvalidArgument, "generators must be strings or integers");
      }
    } else if (c.mode == "generic") {
      c.generators.clear();
      for (std::size_t i = 1; i <= c.rank; ++i) c.generators.push_back("u" + std::to_string(i));
    }
    if (j.contains("window")) c.window = j.at("window").get<std::int64_t>();
    if (j.contains("format")) c.format = j.at("format").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad config: ") + e.what());
  }
  c.validate();
  return c;
}

Json config_to_json(const Config& c) {
  Json j;
  j["rank"] = c.rank;
  j["mode"] = c.mode;
  j["generators"] = c.generators;
  j["window"] = c.window;
  j["format"] = c.format;
  return j;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, "config '" + path + "' is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

}  // namespace r2k
