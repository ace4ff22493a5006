#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "r2k/automorphisms.hpp"
#include "r2k/derivations.hpp"

namespace r2k {

/// Combines reports of the same check families: summary records with equal
/// ids are summed (first-seen order), witness records are kept in order up to
/// max_witnesses per id. A family whose parts disagree on inputs is labelled
/// with merged_inputs.
CheckReport fold_reports(const std::vector<CheckReport>& parts, const ReportMeta& meta,
                         const std::string& merged_inputs = "various", std::size_t max_witnesses = 8);

/// Parameter grid for the per-automorphism audit. Rank 1: ξ, ε ∈ {±1},
/// a ∈ {−2..2}, b ∈ {1, 2, −3, 1/2}, f ∈ {1, 2, 1/2, −1}. Higher rank: a small
/// grid using the indeterminates.
std::vector<AutParams> audit_grid(const Algebra& alg);
/// Smaller grid for the group laws. Rank 1: a ∈ {−1, 0, 1}, b ∈ {1, 2}, f ∈ {1, 2}.
std::vector<AutParams> group_grid(const Algebra& alg);

/// Injectivity of ι, grading, super-antisymmetry, additivity, Jacobi and
/// (ad G±_γ)⁴ = 0.
CheckReport structure_suite(const Algebra& alg, std::int64_t radius, const AuditOptions& opt = {});
/// Leibniz for every ad x, constructor agreement with ad, decomposition round
/// trips and inner/outer status of scalings.
CheckReport derivations_suite(const Algebra& alg, std::int64_t radius, const AuditOptions& opt = {});
/// aut_audit over audit_grid plus group_audit over group_grid.
CheckReport automorphisms_suite(const Algebra& alg, std::int64_t radius, const AuditOptions& opt = {});

/// "structure", "derivations", "automorphisms" or "all"; InvalidArgument otherwise.
CheckReport run_suite(const Algebra& alg, std::string_view suite, std::int64_t radius, const AuditOptions& opt = {});

}  // namespace r2k
