#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "r2k/gamma.hpp"
#include "r2k/parallel.hpp"
#include "r2k/report.hpp"
#include "r2k/scalar.hpp"

namespace r2k {

/// Declaration order is the canonical rendering order.
enum class Kind : std::uint8_t { L, H, Gplus, Gminus, Central };

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) noexcept {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}
/// (−1)^{|a||b|}
inline int sign_of(Parity a, Parity b) noexcept { return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1; }

std::string_view kind_name(Kind k) noexcept;
std::string_view parity_name(Parity p) noexcept;

struct BasisSymbol {
  Kind kind = Kind::Central;
  GammaElem index;  // zero for Central

  static BasisSymbol central(std::size_t rank) { return {Kind::Central, GammaElem(rank)}; }

  Parity parity() const noexcept {
    return (kind == Kind::Gplus || kind == Kind::Gminus) ? Parity::Odd : Parity::Even;
  }
  const GammaElem& degree() const noexcept { return index; }

  bool operator==(const BasisSymbol&) const = default;
  std::strong_ordering operator<=>(const BasisSymbol& o) const noexcept {
    if (auto c = kind <=> o.kind; c != 0) return c;
    return index <=> o.index;
  }
};

std::string to_string(const BasisSymbol& s);

/// Finite F-linear combination of basis symbols, sorted by symbol with no
/// zero coefficients.
class Element {
 public:
  using TermList = std::vector<std::pair<BasisSymbol, Scalar>>;

  Element() = default;
  explicit Element(BasisSymbol s, Scalar c = Scalar(1));
  static Element from_terms(TermList terms);

  const TermList& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Coefficient of s (zero when absent).
  Scalar coeff(const BasisSymbol& s) const;

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Scalar& c, const Element& a);
  Element& operator+=(const Element& o) { return *this = *this + o; }
  /// Adds c·s in place.
  void add_term(const BasisSymbol& s, const Scalar& c);

  bool operator==(const Element& o) const;

 private:
  TermList terms_;
};

/// Degree and parity of a homogeneous element.
struct Homogeneity {
  GammaElem degree;
  Parity parity = Parity::Even;
};

/// Returns the degree/parity when every term shares them (zero counts as
/// even of degree 0); throws NotHomogeneous otherwise.
Homogeneity homogeneity(const Element& x, std::size_t rank);

/// Basis symbols of the window of radius N: the four families over every
/// index with |m_i| ≤ N in canonical order, then the central element.
std::vector<BasisSymbol> window_symbols(std::size_t rank, std::int64_t radius);
bool in_window(const GammaElem& a, std::int64_t radius) noexcept;

/// The generalized Ramond N=2 superconformal algebra over a fixed Γ ⊆ F.
class Algebra {
 public:
  explicit Algebra(GammaEmbedding emb);

  const GammaEmbedding& embedding() const noexcept { return emb_; }
  std::size_t rank() const noexcept { return emb_.rank(); }
  std::size_t num_vars() const noexcept { return emb_.num_vars(); }
  Scalar iota(const GammaElem& a) const { return emb_.embed(a); }

  BasisSymbol L(const GammaElem& a) const { return {Kind::L, a}; }
  BasisSymbol H(const GammaElem& a) const { return {Kind::H, a}; }
  BasisSymbol Gp(const GammaElem& a) const { return {Kind::Gplus, a}; }
  BasisSymbol Gm(const GammaElem& a) const { return {Kind::Gminus, a}; }
  BasisSymbol c() const { return BasisSymbol::central(rank()); }

  /// Super-bracket on basis symbols.
  Element bracket(const BasisSymbol& x, const BasisSymbol& y) const;
  /// Bilinear extension. Throws RankMismatch.
  Element bracket(const Element& x, const Element& y) const;

  ReportMeta meta(int window) const;

 private:
  GammaEmbedding emb_;
};

/// [L_0, x] = −ι(α)x for every window symbol x of degree α.
CheckReport grade_audit(const Algebra& alg, std::int64_t radius, const AuditOptions& opt = {});

/// Super-antisymmetry, degree and parity additivity over window pairs and the
/// graded Jacobi identity over window triples, restricted to pairs/triples
/// whose partial degree sums stay inside the window.
CheckReport structure_audit(const Algebra& alg, std::int64_t radius, const AuditOptions& opt = {});

/// (ad G^{sign}_γ)^order annihilates every window symbol.
CheckReport nilpotency_check(const Algebra& alg, const GammaElem& gamma, int sign, std::int64_t radius, int order = 4,
                             const AuditOptions& opt = {});

/// Graded-Leibniz form of the super-Jacobi identity for one triple:
/// [x,[y,z]] − [[x,y],z] − (−1)^{|x||y|}[y,[x,z]]. Zero iff the triple passes.
Element jacobi_defect(const Algebra& alg, const BasisSymbol& x, const BasisSymbol& y, const BasisSymbol& z);

}  // namespace r2k
