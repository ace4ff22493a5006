#include "r2k/aut_io.hpp"

#include <sstream>

#include "r2k/error.hpp"

namespace r2k {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

int parse_sign(const std::string& text, const char* name) {
  if (text.empty()) return 1;
  if (text == "1" || text == "+1") return 1;
  if (text == "-1") return -1;
  throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be 1 or -1, got '" + text + "'");
}

std::string json_scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  throw Error(ErrorCode::InvalidArgument, "scalar fields must be strings or integers");
}

}  // namespace

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == sep && depth == 0) {
      out.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(text.substr(start)));
  return out;
}

std::vector<Scalar> parse_scalar_list(std::string_view text, std::size_t num_vars) {
  std::vector<Scalar> out;
  for (const auto& piece : split_top_level(text, ',')) out.push_back(parse_scalar(piece, num_vars));
  return out;
}

AutParams aut_params_from_fields(const std::string& f, const std::string& xi, const std::string& eps,
                                 const std::string& a, const std::string& b, std::size_t rank, std::size_t num_vars) {
  AutParams p = AutParams::identity(rank);
  if (!f.empty()) {
    auto values = parse_scalar_list(f, num_vars);
    if (values.size() != rank)
      throw Error(ErrorCode::RankMismatch,
                  "f has " + std::to_string(values.size()) + " values, expected " + std::to_string(rank));
    p.f = MultiplicativeHom(std::move(values));
  }
  p.xi = parse_sign(xi, "xi");
  p.eps = parse_sign(eps, "eps");
  if (!a.empty()) p.a = parse_gamma(a, rank);
  if (!b.empty()) p.b = parse_scalar(b, num_vars);
  p.validate(rank);
  return p;
}

AutParams parse_aut_params(std::string_view text, std::size_t rank, std::size_t num_vars) {
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    try {
      return aut_params_from_json(Json::parse(body), rank, num_vars);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::InvalidArgument, std::string("bad parameter JSON: ") + e.what());
    }
  }
  // Values may contain blanks ("(u1 + 1)/(u2)"): a value runs up to the next flag.
  std::istringstream in(body);
  std::vector<std::pair<std::string, std::string>> flags;
  std::string word;
  while (in >> word) {
    if (word.size() > 2 && word.starts_with("--")) {
      flags.emplace_back(word, "");
    } else {
      if (flags.empty()) throw Error(ErrorCode::InvalidArgument, "expected a flag, got '" + word + "'");
      auto& value = flags.back().second;
      value += (value.empty() ? "" : " ") + word;
    }
  }
  std::string f, xi, eps, a, b;
  for (const auto& [key, value] : flags) {
    if (value.empty()) throw Error(ErrorCode::InvalidArgument, "flag '" + key + "' has no value");
    if (key == "--f")
      f = value;
    else if (key == "--xi")
      xi = value;
    else if (key == "--eps")
      eps = value;
    else if (key == "--a")
      a = value;
    else if (key == "--b")
      b = value;
    else
      throw Error(ErrorCode::InvalidArgument, "unknown parameter flag '" + key + "'");
  }
  return aut_params_from_fields(f, xi, eps, a, b, rank, num_vars);
}

Json aut_params_to_json(const AutParams& p) {
  Json j;
  Json f = Json::array();
  for (const auto& v : p.f.values) f.push_back(to_string(v));
  j["f"] = std::move(f);
  j["xi"] = p.xi;
  j["eps"] = p.eps;
  Json a = Json::array();
  for (std::size_t i = 0; i < p.a.rank(); ++i) a.push_back(p.a[i]);
  j["a"] = std::move(a);
  j["b"] = to_string(p.b);
  return j;
}

AutParams aut_params_from_json(const Json& j, std::size_t rank, std::size_t num_vars) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "parameters must be a JSON object");
  std::string f, xi, eps, a, b;
  if (j.contains("f")) {
    for (const auto& v : j.at("f")) f += (f.empty() ? "" : ",") + json_scalar_text(v);
  }
  if (j.contains("xi")) xi = std::to_string(j.at("xi").get<int>());
  if (j.contains("eps")) eps = std::to_string(j.at("eps").get<int>());
  if (j.contains("a")) {
    const Json& av = j.at("a");
    if (av.is_number_integer()) {
      a = std::to_string(av.get<std::int64_t>());
    } else {
      for (const auto& v : av) a += (a.empty() ? "" : ",") + std::to_string(v.get<std::int64_t>());
    }
  }
  if (j.contains("b")) b = json_scalar_text(j.at("b"));
  return aut_params_from_fields(f, xi, eps, a, b, rank, num_vars);
}

}  // namespace r2k
