#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "r2k/report.hpp"
#include "r2k/scalar.hpp"

namespace r2k {

/// Element of Γ ≅ Z^r as an integer tuple.
class GammaElem {
 public:
  GammaElem() = default;
  explicit GammaElem(std::size_t rank);
  GammaElem(std::initializer_list<std::int64_t> coords);
  static GammaElem from_coords(std::span<const std::int64_t> coords);
  /// The i-th standard generator e_i of Z^r.
  static GammaElem unit(std::size_t rank, std::size_t i);

  std::size_t rank() const noexcept { return rank_; }
  std::int32_t operator[](std::size_t i) const noexcept { return c_[i]; }
  std::int32_t& operator[](std::size_t i) noexcept { return c_[i]; }
  bool is_zero() const noexcept;
  /// max_i |m_i|
  std::int64_t sup_norm() const noexcept;

  friend GammaElem operator+(const GammaElem& a, const GammaElem& b);
  friend GammaElem operator-(const GammaElem& a, const GammaElem& b);
  GammaElem operator-() const;
  friend GammaElem operator*(std::int64_t k, const GammaElem& a);

  bool operator==(const GammaElem&) const = default;
  /// Lexicographic on coordinates (ranks are expected to agree).
  std::strong_ordering operator<=>(const GammaElem& o) const noexcept;

 private:
  std::array<std::int32_t, kMaxVars> c_{};
  std::uint8_t rank_ = 0;
};

/// Throws RankMismatch unless the ranks agree.
void require_rank(const GammaElem& a, std::size_t rank);

/// Σ coeffs[i]·elems[i]. Throws RankMismatch on length or rank disagreement.
GammaElem gamma_combine(std::span<const std::int64_t> coeffs, std::span<const GammaElem> elems);

/// "3" for rank 1, "(1,-2)" otherwise.
std::string to_string(const GammaElem& a);
/// Comma-separated coordinates without parentheses, as used inside symbols.
std::string coords_text(const GammaElem& a);
/// Accepts "3", "(1,-2)" or "1,-2"; throws SyntaxError or RankMismatch.
GammaElem parse_gamma(std::string_view text, std::size_t rank);

/// All m ∈ Z^r with |m_i| ≤ radius, lexicographically ordered.
std::vector<GammaElem> window_indices(std::size_t rank, std::int64_t radius);

/// Injective additive map ι: Z^r → F, m ↦ Σ m_i g_i.
class GammaEmbedding {
 public:
  GammaEmbedding(std::vector<Scalar> generators);
  /// Γ = Z (rank 1, generator 1).
  static GammaEmbedding integers() { return GammaEmbedding({Scalar(1)}); }
  /// Rank r with generators the indeterminates u1..ur.
  static GammaEmbedding generic(std::size_t rank);

  std::size_t rank() const noexcept { return gens_.size(); }
  const std::vector<Scalar>& generators() const noexcept { return gens_; }
  /// Number of indeterminates the scalars may mention.
  std::size_t num_vars() const noexcept { return num_vars_; }

  Scalar embed(const GammaElem& a) const;

 private:
  std::vector<Scalar> gens_;
  std::size_t num_vars_ = 0;
};

/// Passes iff ι(m) ≠ 0 for every nonzero m with |m_i| ≤ 2·radius.
CheckReport injectivity_audit(const GammaEmbedding& emb, std::int64_t radius);

/// φ ∈ Hom_Z(Γ, F), determined by its values on the generators.
struct AdditiveHom {
  std::vector<Scalar> values;

  Scalar operator()(const GammaElem& a) const;
  bool operator==(const AdditiveHom&) const = default;
};

/// f ∈ Hom_Z(Γ, F*), f(m) = Π f_i^{m_i}.
struct MultiplicativeHom {
  std::vector<Scalar> values;

  /// Throws DivisionByZero if some value is zero.
  explicit MultiplicativeHom(std::vector<Scalar> v);
  static MultiplicativeHom trivial(std::size_t rank) { return MultiplicativeHom(std::vector<Scalar>(rank, Scalar(1))); }

  std::size_t rank() const noexcept { return values.size(); }
  Scalar operator()(const GammaElem& a) const;
  /// α ↦ f(α)^k, i.e. each generator value raised to k.
  MultiplicativeHom power(long k) const;
  /// Pointwise product.
  friend MultiplicativeHom operator*(const MultiplicativeHom& f, const MultiplicativeHom& g);
  /// α ↦ f(s·α) for s = ±1.
  MultiplicativeHom precompose_sign(int s) const { return power(s); }
  bool is_trivial() const noexcept;
  bool operator==(const MultiplicativeHom&) const = default;
};

Scalar hom_eval_add(const AdditiveHom& phi, const GammaElem& a);
Scalar hom_eval_mul(const MultiplicativeHom& f, const GammaElem& a);

}  // namespace r2k
