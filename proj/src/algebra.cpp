#include "r2k/algebra.hpp"

#include <algorithm>

#include "r2k/element_io.hpp"
#include "r2k/error.hpp"

namespace r2k {

std::string_view kind_name(Kind k) noexcept {
  switch (k) {
    case Kind::L: return "L";
    case Kind::H: return "H";
    case Kind::Gplus: return "G+";
    case Kind::Gminus: return "G-";
    case Kind::Central: return "C";
  }
  return "?";
}

std::string_view parity_name(Parity p) noexcept { return p == Parity::Even ? "even" : "odd"; }

// ---------------------------------------------------------------- Element

Element::Element(BasisSymbol s, Scalar c) {
  if (!c.is_zero()) terms_.emplace_back(std::move(s), std::move(c));
}

Element Element::from_terms(TermList terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Element e;
  for (auto& [s, c] : terms) {
    if (!e.terms_.empty() && e.terms_.back().first == s) {
      e.terms_.back().second += c;
    } else {
      if (!e.terms_.empty() && e.terms_.back().second.is_zero()) e.terms_.pop_back();
      e.terms_.emplace_back(std::move(s), std::move(c));
    }
  }
  if (!e.terms_.empty() && e.terms_.back().second.is_zero()) e.terms_.pop_back();
  return e;
}

Scalar Element::coeff(const BasisSymbol& s) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), s, [](const auto& t, const BasisSymbol& k) { return t.first < k; });
  return (it != terms_.end() && it->first == s) ? it->second : Scalar();
}

Element Element::operator-() const {
  Element e = *this;
  for (auto& t : e.terms_) t.second = -t.second;
  return e;
}

Element operator+(const Element& a, const Element& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Element out;
  out.terms_.reserve(a.size() + b.size());
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
      out.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->first < i->first) {
      out.terms_.push_back(*j++);
    } else {
      Scalar c = i->second + j->second;
      if (!c.is_zero()) out.terms_.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Scalar& c, const Element& a) {
  if (c.is_zero()) return Element();
  Element e = a;
  for (auto& t : e.terms_) t.second = c * t.second;
  return e;
}

void Element::add_term(const BasisSymbol& s, const Scalar& c) { *this += Element(s, c); }

bool Element::operator==(const Element& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].first == o.terms_[i].first) || !(terms_[i].second == o.terms_[i].second)) return false;
  return true;
}

Homogeneity homogeneity(const Element& x, std::size_t rank) {
  Homogeneity h{GammaElem(rank), Parity::Even};
  bool first = true;
  for (const auto& [s, c] : x.terms()) {
    require_rank(s.index, rank);
    if (first) {
      h = {s.degree(), s.parity()};
      first = false;
    } else if (!(s.degree() == h.degree) || s.parity() != h.parity) {
      throw Error(ErrorCode::NotHomogeneous, "element " + to_string(x) + " mixes degrees or parities");
    }
  }
  return h;
}

bool in_window(const GammaElem& a, std::int64_t radius) noexcept { return a.sup_norm() <= radius; }

std::vector<BasisSymbol> window_symbols(std::size_t rank, std::int64_t radius) {
  const auto idx = window_indices(rank, radius);
  std::vector<BasisSymbol> out;
  out.reserve(4 * idx.size() + 1);
  for (Kind k : {Kind::L, Kind::H, Kind::Gplus, Kind::Gminus})
    for (const auto& a : idx) out.push_back({k, a});
  out.push_back(BasisSymbol::central(rank));
  return out;
}

// ---------------------------------------------------------------- Algebra

Algebra::Algebra(GammaEmbedding emb) : emb_(std::move(emb)) {}

ReportMeta Algebra::meta(int window) const {
  ReportMeta m;
  m.rank = rank();
  for (const auto& g : emb_.generators()) m.generators.push_back(to_string(g));
  m.window = window;
  return m;
}

Element Algebra::bracket(const BasisSymbol& x, const BasisSymbol& y) const {
  if (x.kind == Kind::Central || y.kind == Kind::Central) return Element();
  require_rank(x.index, rank());
  require_rank(y.index, rank());
  const GammaElem sum = x.index + y.index;
  const bool central = sum.is_zero();
  const Scalar a = iota(x.index);
  const Scalar b = iota(y.index);
  static const Scalar half = Rational(1, 2);
  static const Scalar third = Rational(1, 3);
  static const Scalar twelfth = Rational(1, 12);
  static const Scalar quarter = Rational(1, 4);

  Element::TermList t;
  switch (x.kind) {
    case Kind::L:
      switch (y.kind) {
        case Kind::L:
          t.emplace_back(L(sum), a - b);
          if (central) t.emplace_back(c(), (a * a * a - a) * twelfth);
          break;
        case Kind::H: t.emplace_back(H(sum), -b); break;
        case Kind::Gplus:
        case Kind::Gminus: t.emplace_back(BasisSymbol{y.kind, sum}, a * half - b); break;
        default: break;
      }
      break;
    case Kind::H:
      switch (y.kind) {
        case Kind::L: t.emplace_back(H(sum), a); break;
        case Kind::H:
          if (central) t.emplace_back(c(), a * third);
          break;
        case Kind::Gplus: t.emplace_back(Gp(sum), Scalar(1)); break;
        case Kind::Gminus: t.emplace_back(Gm(sum), Scalar(-1)); break;
        default: break;
      }
      break;
    case Kind::Gplus:
    case Kind::Gminus: {
      const Kind g = x.kind;
      switch (y.kind) {
        case Kind::L: t.emplace_back(BasisSymbol{g, sum}, a - b * half); break;
        case Kind::H: t.emplace_back(BasisSymbol{g, sum}, Scalar(g == Kind::Gplus ? -1 : 1)); break;
        case Kind::Gplus:
        case Kind::Gminus: {
          if (y.kind == g) break;
          // [G⁻_m, G⁺_n] with (m, n) read off in either orientation.
          const Scalar& m = g == Kind::Gminus ? a : b;
          const Scalar& n = g == Kind::Gminus ? b : a;
          t.emplace_back(L(sum), Scalar(2));
          t.emplace_back(H(sum), n - m);
          if (central) t.emplace_back(c(), (m * m - quarter) * third);
          break;
        }
        default: break;
      }
      break;
    }
    default: break;
  }
  return Element::from_terms(std::move(t));
}

Element Algebra::bracket(const Element& x, const Element& y) const {
  Element::TermList acc;
  for (const auto& [sx, cx] : x.terms())
    for (const auto& [sy, cy] : y.terms()) {
      Element b = bracket(sx, sy);
      if (b.is_zero()) continue;
      const Scalar k = cx * cy;
      for (const auto& [s, v] : b.terms()) acc.emplace_back(s, k * v);
    }
  return Element::from_terms(std::move(acc));
}

Element jacobi_defect(const Algebra& alg, const BasisSymbol& x, const BasisSymbol& y, const BasisSymbol& z) {
  const Element ex(x), ey(y), ez(z);
  Element lhs = alg.bracket(ex, alg.bracket(y, z));
  Element r1 = alg.bracket(alg.bracket(x, y), ez);
  Element r2 = alg.bracket(ey, alg.bracket(x, z));
  if (sign_of(x.parity(), y.parity()) < 0) r2 = -r2;
  return lhs - r1 - r2;
}

// ---------------------------------------------------------------- audits

CheckReport grade_audit(const Algebra& alg, std::int64_t radius, const AuditOptions& opt) {
  if (radius < 1) throw Error(ErrorCode::InvalidArgument, "window radius must be at least 1");
  CheckReport report;
  report.meta = alg.meta(static_cast<int>(radius));
  const auto syms = window_symbols(alg.rank(), radius);
  const Element l0(alg.L(GammaElem(alg.rank())));
  auto tally = parallel_tally(syms.size(), opt.workers, [&](std::size_t i, CaseTally& t) {
    const Element x(syms[i]);
    Element lhs = alg.bracket(l0, x);
    Element rhs = (-alg.iota(syms[i].degree())) * x;
    t.check(lhs == rhs, [&] { return Witness{to_string(syms[i]), to_string(lhs), to_string(rhs)}; });
  });
  tally.emit(report, "structure.grade", "N=" + std::to_string(radius), opt.max_witnesses);
  return report;
}

CheckReport structure_audit(const Algebra& alg, std::int64_t radius, const AuditOptions& opt) {
  if (radius < 1) throw Error(ErrorCode::InvalidArgument, "window radius must be at least 1");
  CheckReport report;
  report.meta = alg.meta(static_cast<int>(radius));
  const auto syms = window_symbols(alg.rank(), radius);
  const std::size_t n = syms.size();
  const std::string where = "N=" + std::to_string(radius);

  CaseTally antisym, degree, parity;
  {
    auto t = parallel_tally(n * n, opt.workers, [&](std::size_t k, CaseTally& tally) {
      const auto& x = syms[k / n];
      const auto& y = syms[k % n];
      if (!in_window(x.degree() + y.degree(), radius)) return;
      Element xy = alg.bracket(x, y);
      Element yx = alg.bracket(y, x);
      Element rhs = sign_of(x.parity(), y.parity()) < 0 ? yx : -yx;
      tally.check(xy == rhs, [&] {
        return Witness{"(" + to_string(x) + ", " + to_string(y) + ")", to_string(xy), to_string(rhs)};
      });
    });
    antisym = std::move(t);
  }
  {
    auto t = parallel_tally(n * n, opt.workers, [&](std::size_t k, CaseTally& tally) {
      const auto& x = syms[k / n];
      const auto& y = syms[k % n];
      const GammaElem deg = x.degree() + y.degree();
      if (!in_window(deg, radius)) return;
      Element xy = alg.bracket(x, y);
      bool deg_ok = true;
      for (const auto& [s, c] : xy.terms())
        if (s.kind == Kind::Central ? !deg.is_zero() : !(s.degree() == deg)) deg_ok = false;
      tally.check(deg_ok, [&] {
        return Witness{"(" + to_string(x) + ", " + to_string(y) + ")", to_string(xy), "degree " + to_string(deg)};
      });
    });
    degree = std::move(t);
    auto p = parallel_tally(n * n, opt.workers, [&](std::size_t k, CaseTally& tally) {
      const auto& x = syms[k / n];
      const auto& y = syms[k % n];
      const GammaElem deg = x.degree() + y.degree();
      if (!in_window(deg, radius)) return;
      const Parity par = x.parity() + y.parity();
      Element xy = alg.bracket(x, y);
      bool ok = true;
      for (const auto& [s, c] : xy.terms())
        if (s.parity() != par) ok = false;
      tally.check(ok, [&] {
        return Witness{"(" + to_string(x) + ", " + to_string(y) + ")", to_string(xy),
                       "parity " + std::string(parity_name(par))};
      });
    });
    parity = std::move(p);
  }

  auto jacobi = parallel_tally(n * n * n, opt.workers, [&](std::size_t k, CaseTally& tally) {
    const auto& x = syms[k / (n * n)];
    const auto& y = syms[(k / n) % n];
    const auto& z = syms[k % n];
    const GammaElem &a = x.degree(), &b = y.degree(), &g = z.degree();
    if (!in_window(a + b, radius) || !in_window(b + g, radius) || !in_window(a + g, radius) ||
        !in_window(a + b + g, radius))
      return;
    Element defect = jacobi_defect(alg, x, y, z);
    tally.check(defect.is_zero(), [&] {
      Element lhs = alg.bracket(Element(x), alg.bracket(y, z));
      return Witness{"(" + to_string(x) + ", " + to_string(y) + ", " + to_string(z) + ")", to_string(lhs),
                     to_string(lhs - defect)};
    });
  });

  antisym.emit(report, "structure.antisymmetry", where, opt.max_witnesses);
  degree.emit(report, "structure.degree_additivity", where, opt.max_witnesses);
  parity.emit(report, "structure.parity_additivity", where, opt.max_witnesses);
  jacobi.emit(report, "structure.jacobi", where, opt.max_witnesses);
  return report;
}

CheckReport nilpotency_check(const Algebra& alg, const GammaElem& gamma, int sign, std::int64_t radius, int order,
                             const AuditOptions& opt) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "nilpotency order must be at least 1");
  require_rank(gamma, alg.rank());
  CheckReport report;
  report.meta = alg.meta(static_cast<int>(radius));
  const auto syms = window_symbols(alg.rank(), radius);
  const Element g(BasisSymbol{sign > 0 ? Kind::Gplus : Kind::Gminus, gamma});
  auto tally = parallel_tally(syms.size(), opt.workers, [&](std::size_t i, CaseTally& t) {
    Element x(syms[i]);
    for (int k = 0; k < order && !x.is_zero(); ++k) x = alg.bracket(g, x);
    t.check(x.is_zero(), [&] { return Witness{to_string(syms[i]), to_string(x), "0"}; });
  });
  tally.emit(report, "structure.nilpotency",
             "ad " + to_string(g.terms().front().first) + "^" + std::to_string(order) + ", N=" + std::to_string(radius),
             opt.max_witnesses);
  return report;
}

}  // namespace r2k
