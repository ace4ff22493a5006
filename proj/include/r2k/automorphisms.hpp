#pragma once

#include <optional>
#include <string>
#include <vector>

#include "r2k/algebra.hpp"

namespace r2k {

/// Parameters (f, ξ, ε, a, b) of the monomial automorphism σ(f, ξ, ε, a, b).
/// Scalar occurrences of a in the structure formulas mean ι(a).
struct AutParams {
  MultiplicativeHom f;
  int xi = 1;
  int eps = 1;
  GammaElem a;
  Scalar b{1};

  static AutParams identity(std::size_t rank) { return {MultiplicativeHom::trivial(rank), 1, 1, GammaElem(rank), Scalar(1)}; }

  /// Throws InvalidArgument (ξ, ε ∉ {±1}), DivisionByZero (b = 0) or RankMismatch.
  void validate(std::size_t rank) const;
  bool operator==(const AutParams&) const = default;
};

/// Flag form: "--f 2 --xi 1 --eps -1 --a 0 --b 1/2".
std::string to_string(const AutParams& p);

/// σ(p) on a basis symbol / element.
Element aut_apply(const Algebra& alg, const AutParams& p, const BasisSymbol& s);
Element aut_apply(const Algebra& alg, const AutParams& p, const Element& x);

/// Bracket preservation on window pairs, monomial form, parity preservation,
/// degree map and σ(c) = εc.
CheckReport aut_audit(const Algebra& alg, const AutParams& p, std::int64_t radius, const AuditOptions& opt = {});

/// Parameters of σ(p1)∘σ(p2) (p2 applied first), oracle-validated law:
/// φ(α) = f1(ε2α)f2(α), ξ = ξ1ξ2, ε = ε1ε2, a = ε2a1 + ξ1a2,
/// b = f1(ε2a2)b1b2 (ξ2 = 1) or ε1 f1(ε2a2)⁻¹ b1⁻¹ b2 (ξ2 = −1).
AutParams aut_compose(const AutParams& p1, const AutParams& p2);

/// The composition law exactly as printed in the source text; kept only for
/// comparison against the oracle.
AutParams compose_paper(const AutParams& p1, const AutParams& p2);

/// Two-sided inverse: (f^{−ε}, ξ, ε, −ξεa, b') with b' = f(a)b⁻¹ when ξ = 1
/// and ε f(a) b when ξ = −1.
AutParams aut_inverse(const AutParams& p);

/// The printed inverse with b' = sgn(ξ + ε) f(a) b⁻¹ (sgn 0 = 1); comparison only.
AutParams inverse_paper(const AutParams& p);

/// Functional oracle: is σ(q) = σ(p1)∘σ(p2) on every window symbol? Returns the
/// first failing symbol with both images, or nullopt when they agree.
struct OracleMismatch {
  BasisSymbol symbol;
  Element expected;
  Element actual;
};
std::optional<OracleMismatch> compose_oracle(const Algebra& alg, const AutParams& p1, const AutParams& p2,
                                             const AutParams& q, std::int64_t radius);

/// Label in AutL/τ ≅ Z2 × Z2.
struct KleinClass {
  int xi = 1;
  int eps = 1;
  bool operator==(const KleinClass&) const = default;
  friend KleinClass operator*(KleinClass a, KleinClass b) { return {a.xi * b.xi, a.eps * b.eps}; }
};
KleinClass klein_class(const AutParams& p);
inline bool is_tau_member(const AutParams& p) { return p.xi == 1 && p.eps == 1; }

struct GroupAuditOptions {
  /// Associativity is checked on all triples up to this many, otherwise on an
  /// evenly strided subset of this size.
  std::size_t max_triples = 200000;
};

/// Group laws of the parameter family over a sample set (see README for the
/// list of check ids). Comparisons of the printed laws are Info records.
CheckReport group_audit(const Algebra& alg, const std::vector<AutParams>& samples, std::int64_t radius,
                        const AuditOptions& opt = {}, const GroupAuditOptions& gopt = {});

/// Cartesian grid ξ, ε ∈ {±1} × a × b × f over rank-1 parameter lists.
std::vector<AutParams> aut_grid(const std::vector<std::int64_t>& a_values, const std::vector<Scalar>& b_values,
                                const std::vector<Scalar>& f_values);

}  // namespace r2k
