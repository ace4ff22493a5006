#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "r2k/algebra.hpp"

namespace r2k {

/// A homogeneous linear map given by its values on every basis symbol of a
/// window (the central element included).
class GradedMapTable {
 public:
  GradedMapTable(GammaElem degree, Parity parity, std::int64_t window)
      : degree_(std::move(degree)), parity_(parity), window_(window) {}

  const GammaElem& degree() const noexcept { return degree_; }
  Parity parity() const noexcept { return parity_; }
  std::int64_t window() const noexcept { return window_; }
  const std::map<BasisSymbol, Element>& entries() const noexcept { return entries_; }

  void set(const BasisSymbol& s, Element value) { entries_[s] = std::move(value); }
  /// Throws WindowTooSmall when s has no entry.
  const Element& operator()(const BasisSymbol& s) const;
  /// Linear extension over the table entries.
  Element operator()(const Element& x) const;

  /// Checks the degree/parity support invariants; returns the first offending
  /// symbol or nullopt.
  std::optional<BasisSymbol> find_support_violation() const;

 private:
  GammaElem degree_;
  Parity parity_;
  std::int64_t window_;
  std::map<BasisSymbol, Element> entries_;
};

/// D(y) = [x, y] on the window. Throws NotHomogeneous.
GradedMapTable ad_table(const Algebra& alg, const Element& x, std::int64_t window);

/// Degree-0 even map: L_α, H_α ↦ φ(α)·(same), G±_α ↦ (φ(α) ± e0)G±_α, c ↦ 0.
struct Scaling {
  AdditiveHom phi;
  Scalar e0;
  bool operator==(const Scaling&) const = default;
};
/// Odd derivation of degree γ equal to ad(−ξ0 G⁺_γ + ξ1 G⁻_γ).
struct OddInner {
  Scalar xi0;
  Scalar xi1;
  GammaElem gamma;
  bool operator==(const OddInner&) const = default;
};
/// Even derivation of degree γ ≠ 0 with parameters h0 = h_{γ,0} and η.
struct EvenInner {
  Scalar h0;
  Scalar eta;
  GammaElem gamma;
  bool operator==(const EvenInner&) const = default;
};
struct AdRecipe {
  Element x;
  bool operator==(const AdRecipe&) const = default;
};

using DerivationRecipe = std::variant<Scaling, OddInner, EvenInner, AdRecipe>;

std::string to_string(const DerivationRecipe& r);

/// The inner element an EvenInner recipe equals: k1·L_γ + k2·H_γ with
/// k1 = 2ι(γ)⁻¹(h0 + ι(γ)⁻¹η), k2 = ι(γ)⁻¹η.
Element even_inner_element(const Algebra& alg, const EvenInner& r);
/// −ξ0 G⁺_γ + ξ1 G⁻_γ.
Element odd_inner_element(const Algebra& alg, const OddInner& r);

/// Builds the table of a recipe on the window. Throws ZeroGammaForEvenInner,
/// RankMismatch, NotHomogeneous.
GradedMapTable make_derivation(const Algebra& alg, const DerivationRecipe& recipe, std::int64_t window);

/// D[x,y] = [Dx,y] + (−1)^{|D||x|}[x,Dy] for every window pair whose degree
/// sum stays in the window. Throws WindowTooSmall if radius exceeds the table.
CheckReport leibniz_audit(const Algebra& alg, const GradedMapTable& d, std::int64_t radius,
                          const AuditOptions& opt = {});

struct MapComparison {
  bool equal = true;
  std::optional<BasisSymbol> first_difference;
  Element lhs;
  Element rhs;
};

/// Entrywise comparison over the window. Throws DegreeMismatch,
/// ParityMismatch or WindowTooSmall.
MapComparison map_equal(const GradedMapTable& a, const GradedMapTable& b, std::int64_t radius);

/// Reads off the classification representative of a derivation table and
/// verifies the reconstruction. Throws NotDerivation, CentralNotKilled or
/// ClassificationMismatch.
DerivationRecipe decompose_derivation(const Algebra& alg, const GradedMapTable& d);

/// Solves Scaling(φ, e0) = ad(x L_0 + y H_0) on the window by exact linear
/// read-off; nullopt when no (x, y) exists, i.e. the scaling is outer.
std::optional<std::pair<Scalar, Scalar>> scaling_as_inner(const Algebra& alg, const Scaling& s, std::int64_t window);

}  // namespace r2k
