// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "r2k/automorphisms.hpp"
#include "r2k/cli.hpp"
#include "r2k/derivations.hpp"
#include "r2k/element_io.hpp"
#include "r2k/error.hpp"
#include "r2k/suites.hpp"

using namespace r2k;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string first_failure(const CheckReport& r) {
  for (const auto& rec : r.records)
    if (rec.status == CheckStatus::Fail)
      return rec.id + " " + (rec.witness ? rec.witness->inputs + ": " + rec.witness->lhs + " vs " + rec.witness->rhs
                                         : rec.inputs);
  return "";
}

const CheckRecord* find(const CheckReport& r, const std::string& id) {
  for (const auto& rec : r.records)
    if (rec.id == id) return &rec;
  return nullptr;
}

// Tracks one criterion: the first failure message wins.
struct Verdict {
  std::string failure;
  std::size_t cases = 0;

  void require(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failure.empty()) failure = what;
  }
  void require(const CheckReport& r, const std::string& what) { require(r.passed(), what + ": " + first_failure(r)); }
};

int failed = 0;

void criterion(int n, const std::string& title, const std::function<std::string(Verdict&)>& body) {
  Verdict v;
  std::string detail;
  const auto t0 = Clock::now();
  try {
    detail = body(v);
  } catch (const std::exception& e) {
    v.failure = std::string("exception: ") + e.what();
  }
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(1);
  if (v.failure.empty()) {
    line << "PASS criterion " << n << ": " << title << " (" << v.cases << " checks" << (detail.empty() ? "" : ", ")
         << detail << ", " << seconds_since(t0) << "s)";
  } else {
    ++failed;
    line << "FAIL criterion " << n << ": " << title << " -- " << v.failure;
  }
  std::cout << line.str() << std::endl;
}

const Algebra& Z() {
  static const Algebra alg(GammaEmbedding::integers());
  return alg;
}

const Algebra& generic2() {
  static const Algebra alg(GammaEmbedding::generic(2));
  return alg;
}

std::vector<OddInner> odd_recipes() {
  std::vector<OddInner> out;
  for (const auto& [x0, x1] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{2, -3}})
    for (std::int64_t g = -2; g <= 2; ++g) out.push_back({Scalar(x0), Scalar(x1), GammaElem{g}});
  return out;
}

std::vector<EvenInner> even_recipes() {
  std::vector<EvenInner> out;
  for (const auto& [h0, eta] : {std::pair{Scalar(1), Scalar(0)}, std::pair{Scalar(0), Scalar(1)},
                                std::pair{Scalar(Rational(1, 2)), Scalar(-2)}})
    for (std::int64_t g : {-2, -1, 1, 2}) out.push_back({h0, eta, GammaElem{g}});
  return out;
}

std::vector<Scaling> scaling_recipes() {
  std::vector<Scaling> out;
  for (const Scalar& phi : {Scalar(0), Scalar(1), Scalar(Rational(5, 3))})
    for (const Scalar& e0 : {Scalar(0), Scalar(1), Scalar(-2)}) out.push_back({AdditiveHom{{phi}}, e0});
  return out;
}

std::vector<AutParams> criterion7_grid() {
  return aut_grid({-2, -1, 0, 1, 2}, {Scalar(1), Scalar(2), Scalar(-3), Scalar(Rational(1, 2))},
                  {Scalar(1), Scalar(2), Scalar(Rational(1, 2)), Scalar(-1)});
}

// Shared by criteria 8 and 9.
const CheckReport& criterion7_group_report() {
  static const CheckReport report = group_audit(Z(), criterion7_grid(), 5);
  return report;
}

}  // namespace

int main() {
  criterion(1, "structure suite, Gamma=Z N=6 and generic r=2 N=2", [](Verdict& v) {
    const auto t0 = Clock::now();
    v.require(grade_audit(Z(), 6), "grade Z");
    v.require(structure_audit(Z(), 6), "structure Z");
    const double z_time = seconds_since(t0);
    v.require(z_time < 60.0, "Gamma=Z N=6 took " + std::to_string(z_time) + "s");
    v.require(grade_audit(generic2(), 2), "grade generic");
    v.require(structure_audit(generic2(), 2), "structure generic");
    std::ostringstream d;
    d.precision(2);
    d << std::fixed << "Z runtime " << z_time << "s";
    return d.str();
  });

  criterion(2, "ad x is a derivation for every window symbol x, Gamma=Z N=4", [](Verdict& v) {
    for (const auto& s : window_symbols(1, 4))
      v.require(leibniz_audit(Z(), ad_table(Z(), Element(s), 4), 4), "ad " + to_string(s));
    return std::string();
  });

  criterion(3, "odd inner recipes equal ad(-xi0 G+ + xi1 G-), window 4", [](Verdict& v) {
    for (const auto& r : odd_recipes()) {
      Element x = Element::from_terms({{Z().Gp(r.gamma), -r.xi0}, {Z().Gm(r.gamma), r.xi1}});
      const MapComparison cmp = map_equal(make_derivation(Z(), r, 4), ad_table(Z(), x, 4), 4);
      v.require(cmp.equal, to_string(DerivationRecipe(r)) + " differs at " +
                               (cmp.first_difference ? to_string(*cmp.first_difference) : ""));
    }
    return std::string();
  });

  criterion(4, "even inner recipes equal ad(k1 L + k2 H), window 4", [](Verdict& v) {
    for (const auto& r : even_recipes()) {
      const Scalar ig = Z().iota(r.gamma).inverse();
      const Scalar k1 = Scalar(2) * ig * (r.h0 + ig * r.eta), k2 = ig * r.eta;
      Element x = Element::from_terms({{Z().L(r.gamma), k1}, {Z().H(r.gamma), k2}});
      const MapComparison cmp = map_equal(make_derivation(Z(), r, 4), ad_table(Z(), x, 4), 4);
      v.require(cmp.equal, to_string(DerivationRecipe(r)) + " differs at " +
                               (cmp.first_difference ? to_string(*cmp.first_difference) : ""));
    }
    return std::string();
  });

  criterion(5, "scaling derivations: Leibniz, inner for Gamma=Z, outer (1,0) for generic r=2", [](Verdict& v) {
    for (const auto& s : scaling_recipes()) {
      const GradedMapTable d = make_derivation(Z(), s, 4);
      const std::string label = to_string(DerivationRecipe(s));
      v.require(leibniz_audit(Z(), d, 4), label);
      const Scalar k = s.phi.values[0];
      Element x = Element::from_terms({{Z().L(GammaElem{0}), -k}, {Z().H(GammaElem{0}), s.e0}});
      v.require(map_equal(d, ad_table(Z(), x, 4), 4).equal, label + " != ad(" + to_string(x) + ")");
    }
    const Scaling outer{AdditiveHom{{Scalar(1), Scalar(0)}}, Scalar(0)};
    v.require(leibniz_audit(generic2(), make_derivation(generic2(), outer, 2), 2), "generic scaling Leibniz");
    v.require(!scaling_as_inner(generic2(), outer, 2).has_value(), "Scaling((1,0),0) solved as inner");
    return std::string();
  });

  criterion(6, "decompose(make(recipe)) returns the recipe for criteria 3-5", [](Verdict& v) {
    std::vector<DerivationRecipe> all;
    for (const auto& r : odd_recipes()) all.push_back(r);
    for (const auto& r : even_recipes()) all.push_back(r);
    for (const auto& r : scaling_recipes()) all.push_back(r);
    for (const auto& r : all) {
      const DerivationRecipe back = decompose_derivation(Z(), make_derivation(Z(), r, 4));
      v.require(back == r, to_string(r) + " came back as " + to_string(back));
    }
    const Scaling outer{AdditiveHom{{Scalar(1), Scalar(0)}}, Scalar(0)};
    v.require(decompose_derivation(generic2(), make_derivation(generic2(), outer, 2)) == DerivationRecipe(outer),
              "generic Scaling((1,0),0)");
    return std::string();
  });

  criterion(7, "aut_audit over the 320-point grid, Gamma=Z window 5", [](Verdict& v) {
    for (const auto& p : criterion7_grid()) v.require(aut_audit(Z(), p, 5), to_string(p));
    return std::string();
  });

  criterion(8, "composition oracle, group laws and printed-law comparison on the grid", [](Verdict& v) {
    const CheckReport& r = criterion7_group_report();
    for (const char* id : {"aut.compose_oracle", "aut.associativity", "aut.identity", "aut.inverse",
                           "aut.inverse_involution"}) {
      const CheckRecord* rec = find(r, id);
      v.require(rec && rec->status == CheckStatus::Pass && rec->cases > 0, std::string(id) + " did not pass");
    }
    const CheckRecord* oracle = find(r, "aut.compose_oracle");
    v.require(oracle && oracle->cases == 320u * 320u && oracle->failures == 0, "derived law disagreements");
    const CheckRecord* a_diff = find(r, "printed.compose.a_component.eps_differ");
    v.require(a_diff && a_diff->status == CheckStatus::Info && a_diff->failures > 0,
              "no printed a-component disagreement recorded for eps1 != eps2");
    const CheckRecord* inv = find(r, "printed.inverse.oracle.xi_minus");
    v.require(inv && inv->status == CheckStatus::Info && inv->failures > 0,
              "no printed inverse disagreement recorded for xi = -1");
    return "printed a-component wrong on " + std::to_string(a_diff ? a_diff->failures : 0) + "/" +
           std::to_string(a_diff ? a_diff->cases : 0) + " eps1!=eps2 pairs, printed inverse wrong on " +
           std::to_string(inv ? inv->failures : 0) + "/" + std::to_string(inv ? inv->cases : 0) + " xi=-1 samples";
  });

  criterion(9, "Klein quotient: surjective homomorphism, kernel = tau, tau normal", [](Verdict& v) {
    const CheckReport& r = criterion7_group_report();
    for (const char* id : {"aut.klein_homomorphism", "aut.klein_surjective", "aut.klein_kernel", "aut.tau_normal"}) {
      const CheckRecord* rec = find(r, id);
      v.require(rec && rec->status == CheckStatus::Pass && rec->cases > 0, std::string(id) + " did not pass");
    }
    const CheckRecord* surj = find(r, "aut.klein_surjective");
    v.require(surj && surj->cases == 4, "expected four classes");
    return std::string();
  });

  criterion(10, "(ad G+-_gamma)^4 = 0 for |gamma| <= 2, N=4", [](Verdict& v) {
    for (std::int64_t g = -2; g <= 2; ++g)
      for (int sign : {1, -1})
        v.require(nilpotency_check(Z(), GammaElem{g}, sign, 4), "gamma " + std::to_string(g));
    return std::string();
  });

  criterion(11, "audit --suite all JSON is byte-identical across runs and worker counts", [](Verdict& v) {
    std::string first;
    for (const char* workers : {"1", "1", "2", "4"}) {
      std::ostringstream out, err;
      const int status =
          cli::run(std::vector<std::string>{"--workers", workers, "audit", "--suite", "all", "--window", "4", "--format", "json"},
                   out, err);
      v.require(status == 0, std::string("audit exited ") + std::to_string(status) + ": " + err.str());
      if (first.empty())
        first = out.str();
      else
        v.require(out.str() == first, std::string("output differs with --workers ") + workers);
    }
    return std::to_string(first.size()) + " bytes";
  });

  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
