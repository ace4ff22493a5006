#include "r2k/derivation_json.hpp"

#include "r2k/error.hpp"

namespace r2k {

namespace {

Json index_json(const GammaElem& a) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < a.rank(); ++i) arr.push_back(a[i]);
  return arr;
}

GammaElem index_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, "index must be an array of integers");
  std::vector<std::int64_t> coords;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error(ErrorCode::InvalidArgument, "index entries must be integers");
    coords.push_back(v.get<std::int64_t>());
  }
  if (coords.size() != rank)
    throw Error(ErrorCode::RankMismatch, "index has " + std::to_string(coords.size()) + " coordinates, expected " +
                                             std::to_string(rank));
  return GammaElem::from_coords(coords);
}

Kind kind_from_text(const std::string& s) {
  for (Kind k : {Kind::L, Kind::H, Kind::Gplus, Kind::Gminus, Kind::Central})
    if (kind_name(k) == s) return k;
  throw Error(ErrorCode::InvalidArgument, "unknown symbol kind '" + s + "'");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::InvalidArgument, std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json symbol_to_json(const BasisSymbol& s) {
  Json j;
  j["kind"] = std::string(kind_name(s.kind));
  j["index"] = index_json(s.index);
  return j;
}

BasisSymbol symbol_from_json(const Json& j, std::size_t rank) {
  const Kind k = kind_from_text(field(j, "kind").get<std::string>());
  GammaElem idx = j.contains("index") ? index_from_json(j.at("index"), rank) : GammaElem(rank);
  if (k == Kind::Central && !idx.is_zero()) throw Error(ErrorCode::InvalidArgument, "central symbol carries index 0");
  return {k, idx};
}

Json table_to_json(const GradedMapTable& table) {
  Json j;
  j["degree"] = index_json(table.degree());
  j["parity"] = std::string(parity_name(table.parity()));
  j["window"] = table.window();
  Json entries = Json::array();
  for (const auto& [s, value] : table.entries()) {
    Json terms = Json::array();
    for (const auto& [t, c] : value.terms()) {
      Json term = symbol_to_json(t);
      term["coeff"] = to_string(c);
      terms.push_back(std::move(term));
    }
    Json e;
    e["symbol"] = symbol_to_json(s);
    e["value"] = std::move(terms);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

GradedMapTable table_from_json(const Json& j, const Algebra& alg) {
  const std::size_t rank = alg.rank();
  GammaElem degree = index_from_json(field(j, "degree"), rank);
  const std::string parity = field(j, "parity").get<std::string>();
  if (parity != "even" && parity != "odd") throw Error(ErrorCode::InvalidArgument, "parity must be even or odd");
  const Json& w = field(j, "window");
  if (!w.is_number_integer() || w.get<std::int64_t>() < 0)
    throw Error(ErrorCode::InvalidArgument, "window must be a nonnegative integer");
  GradedMapTable table(degree, parity == "odd" ? Parity::Odd : Parity::Even, w.get<std::int64_t>());
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw Error(ErrorCode::InvalidArgument, "entries must be an array");
  for (const auto& e : entries) {
    BasisSymbol s = symbol_from_json(field(e, "symbol"), rank);
    Element::TermList terms;
    for (const auto& t : field(e, "value")) {
      BasisSymbol ts = symbol_from_json(t, rank);
      terms.emplace_back(ts, parse_scalar(field(t, "coeff").get<std::string>(), alg.num_vars()));
    }
    table.set(s, Element::from_terms(std::move(terms)));
  }
  return table;
}

}  // namespace r2k
