#include "r2k/gamma.hpp"

#include <algorithm>

#include "r2k/error.hpp"
#include "r2k/text_cursor.hpp"

namespace r2k {

GammaElem::GammaElem(std::size_t rank) : rank_(static_cast<std::uint8_t>(rank)) {
  if (rank > kMaxVars) throw Error(ErrorCode::InvalidArgument, "rank exceeds " + std::to_string(kMaxVars));
}

GammaElem::GammaElem(std::initializer_list<std::int64_t> coords)
    : GammaElem(coords.size()) {
  std::size_t i = 0;
  for (auto v : coords) c_[i++] = static_cast<std::int32_t>(v);
}

GammaElem GammaElem::from_coords(std::span<const std::int64_t> coords) {
  GammaElem g(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) g.c_[i] = static_cast<std::int32_t>(coords[i]);
  return g;
}

GammaElem GammaElem::unit(std::size_t rank, std::size_t i) {
  GammaElem g(rank);
  g.c_[i] = 1;
  return g;
}

bool GammaElem::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](std::int32_t v) { return v == 0; });
}

std::int64_t GammaElem::sup_norm() const noexcept {
  std::int64_t m = 0;
  for (std::size_t i = 0; i < rank_; ++i) m = std::max<std::int64_t>(m, c_[i] < 0 ? -std::int64_t{c_[i]} : c_[i]);
  return m;
}

void require_rank(const GammaElem& a, std::size_t rank) {
  if (a.rank() != rank)
    throw Error(ErrorCode::RankMismatch,
                "index " + to_string(a) + " has rank " + std::to_string(a.rank()) + ", expected " + std::to_string(rank));
}

GammaElem operator+(const GammaElem& a, const GammaElem& b) {
  require_rank(b, a.rank());
  GammaElem r = a;
  for (std::size_t i = 0; i < a.rank_; ++i) r.c_[i] += b.c_[i];
  return r;
}

GammaElem operator-(const GammaElem& a, const GammaElem& b) { return a + (-b); }

GammaElem GammaElem::operator-() const {
  GammaElem r = *this;
  for (std::size_t i = 0; i < rank_; ++i) r.c_[i] = -r.c_[i];
  return r;
}

GammaElem operator*(std::int64_t k, const GammaElem& a) {
  GammaElem r = a;
  for (std::size_t i = 0; i < a.rank_; ++i) r.c_[i] = static_cast<std::int32_t>(k * a.c_[i]);
  return r;
}

std::strong_ordering GammaElem::operator<=>(const GammaElem& o) const noexcept {
  if (auto c = rank_ <=> o.rank_; c != 0) return c;
  for (std::size_t i = 0; i < rank_; ++i)
    if (auto c = c_[i] <=> o.c_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

GammaElem gamma_combine(std::span<const std::int64_t> coeffs, std::span<const GammaElem> elems) {
  if (coeffs.size() != elems.size() || elems.empty())
    throw Error(ErrorCode::RankMismatch, "coefficient and element counts differ");
  GammaElem sum(elems[0].rank());
  for (std::size_t i = 0; i < elems.size(); ++i) sum = sum + coeffs[i] * elems[i];
  return sum;
}

std::string coords_text(const GammaElem& a) {
  std::string s;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  return s;
}

std::string to_string(const GammaElem& a) {
  if (a.rank() == 1) return std::to_string(a[0]);
  return "(" + coords_text(a) + ")";
}

GammaElem parse_gamma(std::string_view text, std::size_t rank) {
  TextCursor cur(text);
  const bool paren = cur.consume('(');
  auto coords = cur.parse_int_list();
  if (paren) cur.expect(')');
  cur.expect_end();
  if (coords.size() != rank)
    throw Error(ErrorCode::RankMismatch, "index '" + std::string(text) + "' has " + std::to_string(coords.size()) +
                                             " coordinates, expected " + std::to_string(rank));
  return GammaElem::from_coords(coords);
}

std::vector<GammaElem> window_indices(std::size_t rank, std::int64_t radius) {
  std::vector<GammaElem> out;
  GammaElem cur(rank);
  for (std::size_t i = 0; i < rank; ++i) cur[i] = static_cast<std::int32_t>(-radius);
  if (rank == 0) return {cur};
  while (true) {
    out.push_back(cur);
    std::size_t i = rank;
    while (i > 0) {
      --i;
      if (cur[i] < radius) {
        ++cur[i];
        break;
      }
      cur[i] = static_cast<std::int32_t>(-radius);
      if (i == 0) return out;
    }
  }
}

GammaEmbedding::GammaEmbedding(std::vector<Scalar> generators) : gens_(std::move(generators)) {
  if (gens_.empty() || gens_.size() > kMaxVars)
    throw Error(ErrorCode::InvalidArgument, "rank must be between 1 and " + std::to_string(kMaxVars));
  for (const auto& g : gens_) {
    if (g.is_zero()) throw Error(ErrorCode::InvalidArgument, "embedding generators must be nonzero");
    for (std::size_t v = 0; v < kMaxVars; ++v)
      if (g.numerator().contains_var(v) || g.denominator().contains_var(v)) num_vars_ = std::max(num_vars_, v + 1);
  }
}

GammaEmbedding GammaEmbedding::generic(std::size_t rank) {
  std::vector<Scalar> gens;
  for (std::size_t i = 0; i < rank; ++i) gens.push_back(Scalar::indeterminate(i));
  return GammaEmbedding(std::move(gens));
}

Scalar GammaEmbedding::embed(const GammaElem& a) const {
  require_rank(a, rank());
  Scalar s;
  for (std::size_t i = 0; i < rank(); ++i)
    if (a[i] != 0) s += Scalar(static_cast<long>(a[i])) * gens_[i];
  return s;
}

CheckReport injectivity_audit(const GammaEmbedding& emb, std::int64_t radius) {
  if (radius < 1) throw Error(ErrorCode::InvalidArgument, "window radius must be at least 1");
  CheckReport report;
  auto candidates = window_indices(emb.rank(), 2 * radius);
  // ι(−m) = −ι(m): only scan sign representatives, smallest sup-norm first.
  std::erase_if(candidates, [](const GammaElem& m) {
    for (std::size_t i = 0; i < m.rank(); ++i)
      if (m[i] != 0) return m[i] < 0;
    return true;
  });
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const GammaElem& a, const GammaElem& b) { return a.sup_norm() < b.sup_norm(); });
  CaseTally tally;
  for (const auto& m : candidates) {
    Scalar v = emb.embed(m);
    tally.check(!v.is_zero(), [&] { return Witness{to_string(m), "iota" + to_string(m), "0"}; });
  }
  tally.emit(report, "gamma.injectivity", "radius=" + std::to_string(2 * radius), 1);
  return report;
}

Scalar AdditiveHom::operator()(const GammaElem& a) const {
  require_rank(a, values.size());
  Scalar s;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (a[i] != 0) s += Scalar(static_cast<long>(a[i])) * values[i];
  return s;
}

MultiplicativeHom::MultiplicativeHom(std::vector<Scalar> v) : values(std::move(v)) {
  for (const auto& x : values)
    if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "multiplicative homomorphism value must be nonzero");
}

Scalar MultiplicativeHom::operator()(const GammaElem& a) const {
  require_rank(a, values.size());
  Scalar p(1);
  for (std::size_t i = 0; i < values.size(); ++i)
    if (a[i] != 0) p *= values[i].pow(a[i]);
  return p;
}

MultiplicativeHom MultiplicativeHom::power(long k) const {
  std::vector<Scalar> v;
  v.reserve(values.size());
  for (const auto& x : values) v.push_back(x.pow(k));
  return MultiplicativeHom(std::move(v));
}

MultiplicativeHom operator*(const MultiplicativeHom& f, const MultiplicativeHom& g) {
  if (f.rank() != g.rank()) throw Error(ErrorCode::RankMismatch, "homomorphism ranks differ");
  std::vector<Scalar> v;
  for (std::size_t i = 0; i < f.rank(); ++i) v.push_back(f.values[i] * g.values[i]);
  return MultiplicativeHom(std::move(v));
}

bool MultiplicativeHom::is_trivial() const noexcept {
  return std::all_of(values.begin(), values.end(), [](const Scalar& s) { return s.is_one(); });
}

Scalar hom_eval_add(const AdditiveHom& phi, const GammaElem& a) { return phi(a); }
Scalar hom_eval_mul(const MultiplicativeHom& f, const GammaElem& a) { return f(a); }

}  // namespace r2k
