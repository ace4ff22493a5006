#include "r2k/derivations.hpp"

#include "r2k/element_io.hpp"
#include "r2k/error.hpp"
#include "r2k/linear_solve.hpp"

namespace r2k {

const Element& GradedMapTable::operator()(const BasisSymbol& s) const {
  auto it = entries_.find(s);
  if (it == entries_.end())
    throw Error(ErrorCode::WindowTooSmall, "no table entry for " + to_string(s) + " (window " +
                                               std::to_string(window_) + ")");
  return it->second;
}

Element GradedMapTable::operator()(const Element& x) const {
  Element out;
  for (const auto& [s, c] : x.terms()) out += c * (*this)(s);
  return out;
}

std::optional<BasisSymbol> GradedMapTable::find_support_violation() const {
  for (const auto& [s, value] : entries_) {
    const GammaElem target = s.degree() + degree_;
    const Parity par = s.parity() + parity_;
    for (const auto& [t, c] : value.terms()) {
      const bool ok = t.kind == Kind::Central ? (target.is_zero() && par == Parity::Even)
                                              : (t.degree() == target && t.parity() == par);
      if (!ok) return s;
    }
  }
  return std::nullopt;
}

GradedMapTable ad_table(const Algebra& alg, const Element& x, std::int64_t window) {
  const Homogeneity h = homogeneity(x, alg.rank());
  GradedMapTable table(h.degree, h.parity, window);
  for (const auto& s : window_symbols(alg.rank(), window)) table.set(s, alg.bracket(x, Element(s)));
  return table;
}

namespace {

std::string recipe_text(const Scaling& r) {
  std::string phi;
  for (std::size_t i = 0; i < r.phi.values.size(); ++i) phi += (i ? "," : "") + to_string(r.phi.values[i]);
  return "Scaling(phi=[" + phi + "], e0=" + to_string(r.e0) + ")";
}
std::string recipe_text(const OddInner& r) {
  return "OddInner(xi0=" + to_string(r.xi0) + ", xi1=" + to_string(r.xi1) + ", gamma=" + to_string(r.gamma) + ")";
}
std::string recipe_text(const EvenInner& r) {
  return "EvenInner(h0=" + to_string(r.h0) + ", eta=" + to_string(r.eta) + ", gamma=" + to_string(r.gamma) + ")";
}
std::string recipe_text(const AdRecipe& r) { return "Ad(" + to_string(r.x) + ")"; }

}  // namespace

std::string to_string(const DerivationRecipe& r) {
  return std::visit([](const auto& v) { return recipe_text(v); }, r);
}

Element even_inner_element(const Algebra& alg, const EvenInner& r) {
  const Scalar g = alg.iota(r.gamma);
  if (g.is_zero()) throw Error(ErrorCode::ZeroGammaForEvenInner, "iota(gamma) = 0");
  const Scalar ginv = g.inverse();
  const Scalar k1 = Scalar(2) * ginv * (r.h0 + ginv * r.eta);
  const Scalar k2 = ginv * r.eta;
  return Element(alg.L(r.gamma), k1) + Element(alg.H(r.gamma), k2);
}

Element odd_inner_element(const Algebra& alg, const OddInner& r) {
  return Element(alg.Gp(r.gamma), -r.xi0) + Element(alg.Gm(r.gamma), r.xi1);
}

namespace {

GradedMapTable scaling_table(const Algebra& alg, const Scaling& r, std::int64_t window) {
  if (r.phi.values.size() != alg.rank()) throw Error(ErrorCode::RankMismatch, "phi has the wrong number of values");
  GradedMapTable t(GammaElem(alg.rank()), Parity::Even, window);
  for (const auto& s : window_symbols(alg.rank(), window)) {
    if (s.kind == Kind::Central) {
      t.set(s, Element());
      continue;
    }
    Scalar v = r.phi(s.index);
    if (s.kind == Kind::Gplus) v += r.e0;
    if (s.kind == Kind::Gminus) v -= r.e0;
    t.set(s, Element(s, v));
  }
  return t;
}

GradedMapTable odd_inner_table(const Algebra& alg, const OddInner& r, std::int64_t window) {
  require_rank(r.gamma, alg.rank());
  static const Scalar half = Rational(1, 2);
  static const Scalar third = Rational(1, 3);
  static const Scalar quarter = Rational(1, 4);
  const Scalar g = alg.iota(r.gamma);
  GradedMapTable t(r.gamma, Parity::Odd, window);
  for (const auto& s : window_symbols(alg.rank(), window)) {
    if (s.kind == Kind::Central) {
      t.set(s, Element());
      continue;
    }
    const GammaElem to = s.index + r.gamma;
    const Scalar a = alg.iota(s.index);
    const bool central = to.is_zero();
    Element v;
    switch (s.kind) {
      case Kind::L:
        v = Element(alg.Gp(to), (a * half - g) * r.xi0) + Element(alg.Gm(to), -(a * half - g) * r.xi1);
        break;
      case Kind::H: v = Element(alg.Gp(to), r.xi0) + Element(alg.Gm(to), r.xi1); break;
      case Kind::Gplus:
        v = Element(alg.L(to), Scalar(2) * r.xi1) + Element(alg.H(to), (a - g) * r.xi1);
        if (central) v += Element(alg.c(), third * (a * a - quarter) * r.xi1);
        break;
      case Kind::Gminus:
        v = Element(alg.L(to), Scalar(-2) * r.xi0) + Element(alg.H(to), (a - g) * r.xi0);
        if (central) v += Element(alg.c(), -third * (a * a - quarter) * r.xi0);
        break;
      default: break;
    }
    t.set(s, std::move(v));
  }
  return t;
}

GradedMapTable even_inner_table(const Algebra& alg, const EvenInner& r, std::int64_t window) {
  require_rank(r.gamma, alg.rank());
  const Scalar g = alg.iota(r.gamma);
  if (g.is_zero()) throw Error(ErrorCode::ZeroGammaForEvenInner, "iota(gamma) = 0 for " + to_string(r.gamma));
  const Scalar ginv = g.inverse();
  const Scalar ginv2 = ginv * ginv;
  const Scalar two(2);
  const Scalar k = r.h0 + ginv * r.eta;  // k1 / 2
  GradedMapTable t(r.gamma, Parity::Even, window);
  for (const auto& s : window_symbols(alg.rank(), window)) {
    if (s.kind == Kind::Central) {
      t.set(s, Element());
      continue;
    }
    const GammaElem to = s.index + r.gamma;
    const Scalar a = alg.iota(s.index);
    const bool central = to.is_zero();
    Element v;
    switch (s.kind) {
      case Kind::L:
        v = Element(alg.L(to), ginv * (g - a) * two * k) + Element(alg.H(to), r.eta);
        if (central) v += Element(alg.c(), Scalar(Rational(1, 6)) * ginv * (a - a * a * a) * k);
        break;
      case Kind::H:
        v = Element(alg.H(to), -ginv * a * two * k);
        if (central) v += Element(alg.c(), Scalar(Rational(1, 3)) * r.eta);
        break;
      case Kind::Gplus:
        v = Element(alg.Gp(to), ginv * (g - two * a) * r.h0 + two * ginv2 * (g - a) * r.eta);
        break;
      case Kind::Gminus:
        v = Element(alg.Gm(to), ginv * (g - two * a) * r.h0 - two * ginv2 * a * r.eta);
        break;
      default: break;
    }
    t.set(s, std::move(v));
  }
  return t;
}

}  // namespace

GradedMapTable make_derivation(const Algebra& alg, const DerivationRecipe& recipe, std::int64_t window) {
  if (window < 1) throw Error(ErrorCode::WindowTooSmall, "window radius must be at least 1");
  struct Visitor {
    const Algebra& alg;
    std::int64_t window;
    GradedMapTable operator()(const Scaling& r) const { return scaling_table(alg, r, window); }
    GradedMapTable operator()(const OddInner& r) const { return odd_inner_table(alg, r, window); }
    GradedMapTable operator()(const EvenInner& r) const { return even_inner_table(alg, r, window); }
    GradedMapTable operator()(const AdRecipe& r) const { return ad_table(alg, r.x, window); }
  };
  return std::visit(Visitor{alg, window}, recipe);
}

CheckReport leibniz_audit(const Algebra& alg, const GradedMapTable& d, std::int64_t radius, const AuditOptions& opt) {
  if (radius < 1 || radius > d.window())
    throw Error(ErrorCode::WindowTooSmall, "audit radius " + std::to_string(radius) + " not covered by table window " +
                                               std::to_string(d.window()));
  CheckReport report;
  report.meta = alg.meta(static_cast<int>(radius));
  const auto syms = window_symbols(alg.rank(), radius);
  const std::size_t n = syms.size();
  auto tally = parallel_tally(n * n, opt.workers, [&](std::size_t k, CaseTally& t) {
    const auto& x = syms[k / n];
    const auto& y = syms[k % n];
    if (!in_window(x.degree() + y.degree(), radius)) return;
    Element lhs = d(alg.bracket(x, y));
    Element r2 = alg.bracket(Element(x), d(y));
    if (sign_of(d.parity(), x.parity()) < 0) r2 = -r2;
    Element rhs = alg.bracket(d(x), Element(y)) + r2;
    t.check(lhs == rhs, [&] {
      return Witness{"(" + to_string(x) + ", " + to_string(y) + ")", to_string(lhs), to_string(rhs)};
    });
  });
  tally.emit(report, "derivation.leibniz",
             "degree=" + to_string(d.degree()) + " parity=" + std::string(parity_name(d.parity())) +
                 " N=" + std::to_string(radius),
             opt.max_witnesses);
  return report;
}

MapComparison map_equal(const GradedMapTable& a, const GradedMapTable& b, std::int64_t radius) {
  if (!(a.degree() == b.degree()))
    throw Error(ErrorCode::DegreeMismatch, to_string(a.degree()) + " vs " + to_string(b.degree()));
  if (a.parity() != b.parity()) throw Error(ErrorCode::ParityMismatch, "tables differ in parity");
  if (radius > a.window() || radius > b.window())
    throw Error(ErrorCode::WindowTooSmall, "comparison radius exceeds a table window");
  MapComparison out;
  for (const auto& s : window_symbols(a.degree().rank(), radius)) {
    const Element& x = a(s);
    const Element& y = b(s);
    if (!(x == y)) {
      out.equal = false;
      out.first_difference = s;
      out.lhs = x;
      out.rhs = y;
      return out;
    }
  }
  return out;
}

DerivationRecipe decompose_derivation(const Algebra& alg, const GradedMapTable& d) {
  const std::size_t r = alg.rank();
  const GammaElem zero(r);
  const GammaElem& gamma = d.degree();
  require_rank(gamma, r);
  if (d.window() < 1) throw Error(ErrorCode::WindowTooSmall, "decomposition needs window radius >= 1");

  const bool degree_zero_even = d.parity() == Parity::Even && gamma.is_zero();
  if (degree_zero_even && !d(alg.c()).is_zero())
    throw Error(ErrorCode::CentralNotKilled, "D(C) = " + to_string(d(alg.c())));

  CheckReport leib = leibniz_audit(alg, d, d.window());
  if (!leib.passed()) {
    const auto& w = leib.records.size() > 1 ? leib.records[1].witness : std::nullopt;
    throw Error(ErrorCode::NotDerivation,
                w ? "Leibniz rule fails on " + w->inputs + ": " + w->lhs + " != " + w->rhs : "Leibniz rule fails");
  }

  DerivationRecipe recipe;
  if (d.parity() == Parity::Odd) {
    const Element& dh = d(alg.H(zero));
    recipe = OddInner{dh.coeff(alg.Gp(gamma)), dh.coeff(alg.Gm(gamma)), gamma};
  } else if (!gamma.is_zero()) {
    if (alg.iota(gamma).is_zero()) throw Error(ErrorCode::ZeroGammaForEvenInner, "iota(gamma) = 0");
    const Scalar eta = d(alg.L(zero)).coeff(alg.H(gamma));
    const Scalar h0 = d(alg.Gm(zero)).coeff(alg.Gm(gamma));
    recipe = EvenInner{h0, eta, gamma};
  } else {
    AdditiveHom phi;
    for (std::size_t i = 0; i < r; ++i) {
      const auto e = GammaElem::unit(r, i);
      phi.values.push_back(d(alg.L(e)).coeff(alg.L(e)));
    }
    const Scalar e0 = d(alg.Gp(zero)).coeff(alg.Gp(zero));
    recipe = Scaling{std::move(phi), e0};
  }

  const MapComparison cmp = map_equal(make_derivation(alg, recipe, d.window()), d, d.window());
  if (!cmp.equal)
    throw Error(ErrorCode::ClassificationMismatch,
                to_string(recipe) + " differs at " + to_string(*cmp.first_difference) + ": " + to_string(cmp.lhs) +
                    " vs " + to_string(cmp.rhs));
  return recipe;
}

std::optional<std::pair<Scalar, Scalar>> scaling_as_inner(const Algebra& alg, const Scaling& s, std::int64_t window) {
  // ad(x L_0 + y H_0) is diagonal: L_α, H_α ↦ −ι(α)x; G±_α ↦ −ι(α)x ± y.
  LinearSystem sys;
  sys.unknowns = 2;
  const GradedMapTable target = make_derivation(alg, s, window);
  for (const auto& sym : window_symbols(alg.rank(), window)) {
    if (sym.kind == Kind::Central) continue;
    const Scalar a = alg.iota(sym.index);
    Scalar ycoef;
    if (sym.kind == Kind::Gplus) ycoef = Scalar(1);
    if (sym.kind == Kind::Gminus) ycoef = Scalar(-1);
    sys.add_equation({-a, ycoef}, target(sym).coeff(sym));
  }
  auto sol = solve(sys);
  if (!sol) return std::nullopt;
  return std::make_pair(sol->particular[0], sol->particular[1]);
}

}  // namespace r2k
