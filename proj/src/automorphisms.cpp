#include "r2k/automorphisms.hpp"

#include <algorithm>
#include <array>

#include "r2k/element_io.hpp"
#include "r2k/error.hpp"

namespace r2k {

void AutParams::validate(std::size_t rank) const {
  if (xi != 1 && xi != -1) throw Error(ErrorCode::InvalidArgument, "xi must be 1 or -1");
  if (eps != 1 && eps != -1) throw Error(ErrorCode::InvalidArgument, "eps must be 1 or -1");
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "b must be nonzero");
  if (f.rank() != rank) throw Error(ErrorCode::RankMismatch, "f has " + std::to_string(f.rank()) + " values");
  require_rank(a, rank);
}

std::string to_string(const AutParams& p) {
  std::string f;
  for (std::size_t i = 0; i < p.f.values.size(); ++i) f += (i ? "," : "") + to_string(p.f.values[i]);
  return "--f " + f + " --xi " + std::to_string(p.xi) + " --eps " + std::to_string(p.eps) + " --a " +
         coords_text(p.a) + " --b " + to_string(p.b);
}

Element aut_apply(const Algebra& alg, const AutParams& p, const BasisSymbol& s) {
  const std::size_t r = alg.rank();
  require_rank(s.index, r);
  if (s.kind == Kind::Central) return Element(s, Scalar(p.eps));
  const GammaElem& alpha = s.index;
  const Scalar fa = p.f(alpha);
  const GammaElem flipped = p.eps * alpha;
  const bool at_zero = alpha.is_zero();
  switch (s.kind) {
    case Kind::L: {
      const Scalar ia = alg.iota(p.a);
      Element e = Element(alg.L(flipped), Scalar(p.eps) * fa) + Element(alg.H(flipped), fa * ia);
      if (at_zero) e += Element(alg.c(), Scalar(Rational(p.eps, 6)) * ia * ia);
      return e;
    }
    case Kind::H: {
      Element e(alg.H(flipped), Scalar(p.xi) * fa);
      if (at_zero) e += Element(alg.c(), Scalar(Rational(p.xi * p.eps, 3)) * alg.iota(p.a));
      return e;
    }
    case Kind::Gplus:
      if (p.xi == 1) return Element(alg.Gp(p.eps * (alpha + p.a)), fa * p.b);
      return Element(alg.Gm(p.eps * (alpha - p.a)), fa * p.b);
    case Kind::Gminus: {
      const Scalar coeff = Scalar(p.eps) * fa * p.b.inverse();
      if (p.xi == -1) return Element(alg.Gp(p.eps * (alpha + p.a)), coeff);
      return Element(alg.Gm(p.eps * (alpha - p.a)), coeff);
    }
    default: break;
  }
  return Element();
}

Element aut_apply(const Algebra& alg, const AutParams& p, const Element& x) {
  Element::TermList acc;
  for (const auto& [s, c] : x.terms()) {
    const Element image = aut_apply(alg, p, s);
    for (const auto& [t, v] : image.terms()) acc.emplace_back(t, c * v);
  }
  return Element::from_terms(std::move(acc));
}

namespace {

// The symbol σ sends s to (up to the triangular H/c tail on L and H).
BasisSymbol leading_image(const AutParams& p, const BasisSymbol& s) {
  switch (s.kind) {
    case Kind::L:
    case Kind::H: return {s.kind, p.eps * s.index};
    case Kind::Gplus:
      return p.xi == 1 ? BasisSymbol{Kind::Gplus, p.eps * (s.index + p.a)}
                       : BasisSymbol{Kind::Gminus, p.eps * (s.index - p.a)};
    case Kind::Gminus:
      return p.xi == -1 ? BasisSymbol{Kind::Gplus, p.eps * (s.index + p.a)}
                        : BasisSymbol{Kind::Gminus, p.eps * (s.index - p.a)};
    default: return s;
  }
}

bool monomial_form(const AutParams& p, const BasisSymbol& s, const Element& image) {
  const BasisSymbol lead = leading_image(p, s);
  if (image.coeff(lead).is_zero()) return false;
  for (const auto& [t, c] : image.terms()) {
    if (t == lead) continue;
    // Allowed tail: H_{εα} under L_α, and c under L_0 / H_0.
    if (s.kind == Kind::L && t.kind == Kind::H && t.index == lead.index) continue;
    if ((s.kind == Kind::L || s.kind == Kind::H) && t.kind == Kind::Central && s.index.is_zero()) continue;
    return false;
  }
  return true;
}

std::string params_text(const AutParams& p) { return "sigma(" + to_string(p) + ")"; }

}  // namespace

CheckReport aut_audit(const Algebra& alg, const AutParams& p, std::int64_t radius, const AuditOptions& opt) {
  p.validate(alg.rank());
  CheckReport report;
  report.meta = alg.meta(static_cast<int>(radius));
  const auto syms = window_symbols(alg.rank(), radius);
  const std::size_t n = syms.size();
  std::vector<Element> images;
  images.reserve(n);
  for (const auto& s : syms) images.push_back(aut_apply(alg, p, s));
  const std::string where = params_text(p) + " N=" + std::to_string(radius);

  CaseTally hom = parallel_tally(n * n, opt.workers, [&](std::size_t k, CaseTally& t) {
    const std::size_t i = k / n, j = k % n;
    Element lhs = aut_apply(alg, p, alg.bracket(syms[i], syms[j]));
    Element rhs = alg.bracket(images[i], images[j]);
    t.check(lhs == rhs, [&] {
      return Witness{"(" + to_string(syms[i]) + ", " + to_string(syms[j]) + ")", to_string(lhs), to_string(rhs)};
    });
  });

  CaseTally mono, parity, degree, central;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = syms[i];
    const auto& img = images[i];
    const auto witness = [&](std::string expected) {
      return [&, expected] { return Witness{to_string(s), to_string(img), expected}; };
    };
    if (s.kind == Kind::Central) {
      const Element want(s, Scalar(p.eps));
      central.check(img == want, witness(to_string(want)));
      continue;
    }
    const BasisSymbol lead = leading_image(p, s);
    mono.check(monomial_form(p, s, img), witness("monomial image on " + to_string(lead)));
    parity.check(std::all_of(img.terms().begin(), img.terms().end(),
                             [&](const auto& t) { return t.first.parity() == s.parity(); }),
                 witness(std::string("parity ") + std::string(parity_name(s.parity()))));
    degree.check(std::all_of(img.terms().begin(), img.terms().end(),
                             [&](const auto& t) {
                               return t.first.kind == Kind::Central ? lead.index.is_zero()
                                                                    : t.first.index == lead.index;
                             }),
                 witness("degree " + to_string(lead.index)));
  }

  hom.emit(report, "aut.bracket_preservation", where, opt.max_witnesses);
  mono.emit(report, "aut.monomial_form", where, opt.max_witnesses);
  parity.emit(report, "aut.parity", where, opt.max_witnesses);
  degree.emit(report, "aut.degree_map", where, opt.max_witnesses);
  central.emit(report, "aut.central", where, opt.max_witnesses);
  return report;
}

AutParams aut_compose(const AutParams& p1, const AutParams& p2) {
  if (p1.f.rank() != p2.f.rank()) throw Error(ErrorCode::RankMismatch, "parameter ranks differ");
  AutParams q = p1;
  q.f = p1.f.precompose_sign(p2.eps) * p2.f;
  q.xi = p1.xi * p2.xi;
  q.eps = p1.eps * p2.eps;
  q.a = p2.eps * p1.a + p1.xi * p2.a;
  const Scalar shift = p1.f(p2.eps * p2.a);
  if (p2.xi == 1)
    q.b = shift * p1.b * p2.b;
  else
    q.b = Scalar(p1.eps) * shift.inverse() * p1.b.inverse() * p2.b;
  return q;
}

AutParams compose_paper(const AutParams& p1, const AutParams& p2) {
  if (p1.f.rank() != p2.f.rank()) throw Error(ErrorCode::RankMismatch, "parameter ranks differ");
  AutParams q = p1;
  q.f = p1.f.precompose_sign(p2.eps) * p2.f;
  q.xi = p1.xi * p2.xi;
  q.eps = p1.eps * p2.eps;
  q.a = (p1.xi * p2.xi * p1.eps) * p1.a + p2.xi * p2.a;
  q.b = p1.f((p2.xi * p2.eps) * p2.a) * p1.b.pow(p2.xi) * p2.b;
  return q;
}

AutParams aut_inverse(const AutParams& p) {
  AutParams q = p;
  q.f = p.f.power(-p.eps);
  q.xi = p.xi;
  q.eps = p.eps;
  q.a = (-p.xi * p.eps) * p.a;
  if (p.xi == 1)
    q.b = p.f(p.a) * p.b.inverse();
  else
    q.b = Scalar(p.eps) * p.f(p.a) * p.b;
  return q;
}

AutParams inverse_paper(const AutParams& p) {
  AutParams q = p;
  q.f = p.f.power(-p.eps);
  q.a = (-p.xi * p.eps) * p.a;
  const int sgn = p.xi + p.eps >= 0 ? 1 : -1;
  q.b = Scalar(sgn) * p.f(p.a) * p.b.inverse();
  return q;
}

std::optional<OracleMismatch> compose_oracle(const Algebra& alg, const AutParams& p1, const AutParams& p2,
                                             const AutParams& q, std::int64_t radius) {
  for (const auto& s : window_symbols(alg.rank(), radius)) {
    Element expected = aut_apply(alg, p1, aut_apply(alg, p2, s));
    Element actual = aut_apply(alg, q, s);
    if (!(expected == actual)) return OracleMismatch{s, std::move(expected), std::move(actual)};
  }
  return std::nullopt;
}

KleinClass klein_class(const AutParams& p) { return {p.xi, p.eps}; }

namespace {

// Window images of every sample, computed once.
struct ImageCache {
  std::vector<BasisSymbol> syms;
  std::vector<std::vector<Element>> images;  // [sample][symbol]

  ImageCache(const Algebra& alg, const std::vector<AutParams>& samples, std::int64_t radius)
      : syms(window_symbols(alg.rank(), radius)) {
    images.reserve(samples.size());
    for (const auto& p : samples) {
      std::vector<Element> row;
      row.reserve(syms.size());
      for (const auto& s : syms) row.push_back(aut_apply(alg, p, s));
      images.push_back(std::move(row));
    }
  }
};

// First window symbol where σ(q) differs from σ(p1)∘σ(p2), using cached σ(p2) images.
std::optional<Witness> oracle_check(const Algebra& alg, const ImageCache& cache, const AutParams& p1, std::size_t j,
                                    const AutParams& q) {
  for (std::size_t k = 0; k < cache.syms.size(); ++k) {
    Element expected = aut_apply(alg, p1, cache.images[j][k]);
    Element actual = aut_apply(alg, q, cache.syms[k]);
    if (!(expected == actual)) return Witness{to_string(cache.syms[k]), to_string(expected), to_string(actual)};
  }
  return std::nullopt;
}

std::string pair_text(const AutParams& p, const AutParams& q) { return params_text(p) + " . " + params_text(q); }

void emit_info(CheckReport& report, const CaseTally& tally, const std::string& id, const std::string& inputs,
               const std::optional<Witness>& example, const std::string& note) {
  CheckRecord r;
  r.id = id;
  r.inputs = inputs;
  r.status = CheckStatus::Info;
  r.cases = tally.cases();
  r.failures = tally.failures();
  r.witness = example;
  r.note = note;
  report.add(std::move(r));
}

}  // namespace

CheckReport group_audit(const Algebra& alg, const std::vector<AutParams>& samples, std::int64_t radius,
                        const AuditOptions& opt, const GroupAuditOptions& gopt) {
  const std::size_t rank = alg.rank();
  for (const auto& p : samples) p.validate(rank);
  CheckReport report;
  report.meta = alg.meta(static_cast<int>(radius));
  const std::size_t n = samples.size();
  const std::string where = std::to_string(n) + " samples, N=" + std::to_string(radius);
  const AutParams id = AutParams::identity(rank);
  const ImageCache cache(alg, samples, radius);

  std::vector<AutParams> inverses;
  inverses.reserve(n);
  for (const auto& p : samples) inverses.push_back(aut_inverse(p));

  // (i) derived composition against the functional oracle
  CaseTally compose = parallel_tally(n * n, opt.workers, [&](std::size_t k, CaseTally& t) {
    const std::size_t i = k / n, j = k % n;
    auto w = oracle_check(alg, cache, samples[i], j, aut_compose(samples[i], samples[j]));
    if (w) {
      w->inputs = pair_text(samples[i], samples[j]) + " at " + w->inputs;
      t.fail(std::move(*w));
    } else {
      t.pass();
    }
  });
  compose.emit(report, "aut.compose_oracle", where, opt.max_witnesses);

  // (ii) associativity on parameters
  const std::size_t all_triples = n * n * n;
  const std::size_t triples = std::min(all_triples, gopt.max_triples);
  CaseTally assoc = parallel_tally(triples, opt.workers, [&](std::size_t k, CaseTally& t) {
    const std::size_t idx = triples == all_triples ? k : (k * all_triples) / triples;
    const auto& p = samples[idx / (n * n)];
    const auto& q = samples[(idx / n) % n];
    const auto& r = samples[idx % n];
    AutParams left = aut_compose(aut_compose(p, q), r);
    AutParams right = aut_compose(p, aut_compose(q, r));
    t.check(left == right, [&] {
      return Witness{pair_text(p, q) + " . " + params_text(r), to_string(left), to_string(right)};
    });
  });
  assoc.emit(report, "aut.associativity",
             where + (triples == all_triples ? ", all triples" : ", strided subset of " + std::to_string(triples)),
             opt.max_witnesses);

  // (iii) identity and inverse laws
  CaseTally identity, inverse, involution;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = samples[i];
    const auto& q = inverses[i];
    for (const AutParams& got : {aut_compose(p, id), aut_compose(id, p)})
      identity.check(got == p, [&] { return Witness{params_text(p), to_string(got), to_string(p)}; });
    for (const AutParams& got : {aut_compose(p, q), aut_compose(q, p)})
      inverse.check(got == id, [&] { return Witness{params_text(p), to_string(got), to_string(id)}; });
    // σ(q)∘σ(p) must be the identity map, not only on parameters.
    auto w = oracle_check(alg, cache, q, i, id);
    inverse.check(!w, [&] { return Witness{params_text(p) + " at " + w->inputs, w->lhs, w->rhs}; });
    const AutParams back = aut_inverse(q);
    involution.check(back == p, [&] { return Witness{params_text(p), to_string(back), to_string(p)}; });
  }
  identity.emit(report, "aut.identity", where, opt.max_witnesses);
  inverse.emit(report, "aut.inverse", where, opt.max_witnesses);
  involution.emit(report, "aut.inverse_involution", where, opt.max_witnesses);

  // (iv) Klein quotient
  CaseTally klein_hom = parallel_tally(n * n, opt.workers, [&](std::size_t k, CaseTally& t) {
    const auto& p = samples[k / n];
    const auto& q = samples[k % n];
    const KleinClass got = klein_class(aut_compose(p, q));
    const KleinClass want = klein_class(p) * klein_class(q);
    t.check(got == want, [&] {
      return Witness{pair_text(p, q), "(" + std::to_string(got.xi) + "," + std::to_string(got.eps) + ")",
                     "(" + std::to_string(want.xi) + "," + std::to_string(want.eps) + ")"};
    });
  });
  klein_hom.emit(report, "aut.klein_homomorphism", where, opt.max_witnesses);

  CaseTally surj, kernel;
  std::array<bool, 4> seen{};
  for (const auto& p : samples) {
    const KleinClass k = klein_class(p);
    seen[(k.xi < 0 ? 2 : 0) + (k.eps < 0 ? 1 : 0)] = true;
    const bool in_kernel = k == KleinClass{};
    kernel.check(in_kernel == is_tau_member(p), [&] {
      return Witness{params_text(p), in_kernel ? "kernel" : "not kernel", is_tau_member(p) ? "tau" : "not tau"};
    });
  }
  for (std::size_t c = 0; c < 4; ++c) {
    const std::string cls = "(" + std::string(c & 2 ? "-1" : "1") + "," + std::string(c & 1 ? "-1" : "1") + ")";
    surj.check(seen[c], [&] { return Witness{"class " + cls, "absent", "realized"}; });
  }
  surj.emit(report, "aut.klein_surjective", where, opt.max_witnesses);
  kernel.emit(report, "aut.klein_kernel", where, opt.max_witnesses);

  // (v) τ is normal: p·t·p⁻¹ stays in τ, checked on parameters and as maps.
  std::vector<std::size_t> taus;
  for (std::size_t i = 0; i < n; ++i)
    if (is_tau_member(samples[i])) taus.push_back(i);
  CaseTally normal = parallel_tally(n * taus.size(), opt.workers, [&](std::size_t k, CaseTally& t) {
    const auto& p = samples[k / taus.size()];
    const auto& tau = samples[taus[k % taus.size()]];
    const AutParams conj = aut_compose(aut_compose(p, tau), inverses[k / taus.size()]);
    t.check(is_tau_member(conj), [&] { return Witness{pair_text(p, tau), to_string(conj), "xi=1 eps=1"}; });
  });
  normal.emit(report, "aut.tau_normal", where, opt.max_witnesses);

  // (vi) printed laws against the oracle, informational.
  CaseTally paper_oracle, a_differ, a_equal, b_comp;
  std::optional<Witness> ex_oracle, ex_a_differ, ex_a_equal, ex_b;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& p1 = samples[i];
      const auto& p2 = samples[j];
      const AutParams derived = aut_compose(p1, p2);
      const AutParams printed = compose_paper(p1, p2);
      auto w = oracle_check(alg, cache, p1, j, printed);
      if (w) {
        w->inputs = pair_text(p1, p2) + " at " + w->inputs;
        if (!ex_oracle) ex_oracle = *w;
        paper_oracle.fail(std::move(*w));
      } else {
        paper_oracle.pass();
      }
      CaseTally& a_tally = p1.eps != p2.eps ? a_differ : a_equal;
      std::optional<Witness>& a_ex = p1.eps != p2.eps ? ex_a_differ : ex_a_equal;
      if (printed.a == derived.a) {
        a_tally.pass();
      } else {
        Witness aw{pair_text(p1, p2), "a=" + to_string(printed.a), "a=" + to_string(derived.a)};
        if (!a_ex) a_ex = aw;
        a_tally.fail(std::move(aw));
      }
      if (printed.b == derived.b) {
        b_comp.pass();
      } else {
        Witness bw{pair_text(p1, p2), "b=" + to_string(printed.b), "b=" + to_string(derived.b)};
        if (!ex_b) ex_b = bw;
        b_comp.fail(std::move(bw));
      }
    }
  }
  const std::string disagree = "failures = pairs where the printed law disagrees with the oracle";
  emit_info(report, paper_oracle, "printed.compose.oracle", where, ex_oracle, disagree);
  emit_info(report, a_differ, "printed.compose.a_component.eps_differ", where, ex_a_differ, disagree);
  emit_info(report, a_equal, "printed.compose.a_component.eps_equal", where, ex_a_equal, disagree);
  emit_info(report, b_comp, "printed.compose.b_component", where, ex_b, disagree);

  CaseTally inv_xi_minus, inv_xi_plus;
  std::optional<Witness> ex_minus, ex_plus;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = samples[i];
    const AutParams printed = inverse_paper(p);
    auto w = oracle_check(alg, cache, printed, i, id);
    CaseTally& t = p.xi == -1 ? inv_xi_minus : inv_xi_plus;
    std::optional<Witness>& ex = p.xi == -1 ? ex_minus : ex_plus;
    if (w) {
      w->inputs = params_text(p) + " printed inverse " + to_string(printed) + " at " + w->inputs;
      if (!ex) ex = *w;
      t.fail(std::move(*w));
    } else {
      t.pass();
    }
  }
  emit_info(report, inv_xi_minus, "printed.inverse.oracle.xi_minus", where, ex_minus, disagree);
  emit_info(report, inv_xi_plus, "printed.inverse.oracle.xi_plus", where, ex_plus, disagree);
  return report;
}

std::vector<AutParams> aut_grid(const std::vector<std::int64_t>& a_values, const std::vector<Scalar>& b_values,
                                const std::vector<Scalar>& f_values) {
  std::vector<AutParams> out;
  for (int xi : {1, -1})
    for (int eps : {1, -1})
      for (auto a : a_values)
        for (const auto& b : b_values)
          for (const auto& f : f_values) out.push_back({MultiplicativeHom({f}), xi, eps, GammaElem{a}, b});
  return out;
}

}  // namespace r2k
