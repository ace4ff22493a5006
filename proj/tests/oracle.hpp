#pragma once

// Test-only reference implementations. They share the Scalar type with the
// library (tested on its own in test_scalar) but nothing else: basis symbols,
// the structure constants, the automorphism formulas and the derivation
// closed forms are re-derived here from the defining relations.

#include <map>
#include <tuple>
#include <vector>

#include "r2k/algebra.hpp"
#include "r2k/automorphisms.hpp"
#include "r2k/derivations.hpp"

namespace oracle {

using r2k::Scalar;
using Index = std::vector<std::int64_t>;

enum K { L = 0, H = 1, GP = 2, GM = 3, C = 4 };

using Key = std::pair<int, Index>;
using Vec = std::map<Key, Scalar>;

inline void add(Vec& v, int kind, const Index& idx, const Scalar& c) {
  if (c.is_zero()) return;
  Key k{kind, kind == C ? Index(idx.size(), 0) : idx};
  auto it = v.find(k);
  if (it == v.end()) {
    v.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) v.erase(it);
}

inline Index plus(const Index& a, const Index& b) {
  Index r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline Index times(std::int64_t k, const Index& a) {
  Index r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}
inline bool zero(const Index& a) {
  for (auto x : a)
    if (x != 0) return false;
  return true;
}

/// Structure constants over Γ = Z^r with ι(m) = Σ m_i g_i.
struct Ref {
  std::vector<Scalar> gens;

  Scalar iota(const Index& m) const {
    Scalar s;
    for (std::size_t i = 0; i < m.size(); ++i) s += Scalar(static_cast<long>(m[i])) * gens[i];
    return s;
  }

  // Brackets listed in the defining relations, in the listed orientation.
  // Returns false when the pair is not one of them.
  bool listed(int x, const Index& a, int y, const Index& b, Vec& out) const {
    const Scalar A = iota(a), B = iota(b);
    const Index s = plus(a, b);
    const bool d = zero(s);
    if (x == L && y == L) {
      add(out, L, s, A - B);
      if (d) add(out, C, s, (A * A * A - A) * Scalar(r2k::Rational(1, 12)));
      return true;
    }
    if (x == H && y == H) {
      if (d) add(out, C, s, A * Scalar(r2k::Rational(1, 3)));
      return true;
    }
    if (x == L && y == H) {
      add(out, H, s, -B);
      return true;
    }
    if (x == L && (y == GP || y == GM)) {
      add(out, y, s, A * Scalar(r2k::Rational(1, 2)) - B);
      return true;
    }
    if (x == H && (y == GP || y == GM)) {
      add(out, y, s, Scalar(y == GP ? 1 : -1));
      return true;
    }
    if (x == GM && y == GP) {
      add(out, L, s, Scalar(2));
      add(out, H, s, -(A - B));
      if (d) add(out, C, s, (A * A - Scalar(r2k::Rational(1, 4))) * Scalar(r2k::Rational(1, 3)));
      return true;
    }
    return false;
  }

  Vec bracket(int x, const Index& a, int y, const Index& b) const {
    Vec out;
    if (x == C || y == C) return out;
    if (listed(x, a, y, b, out)) return out;
    Vec rev;
    if (listed(y, b, x, a, rev)) {
      const bool both_odd = x >= GP && y >= GP;
      // [x,y] = −(−1)^{|x||y|}[y,x]
      for (auto& [k, v] : rev) out.emplace(k, both_odd ? v : -v);
    }
    return out;
  }

  Vec bracket(const Vec& x, const Vec& y) const {
    Vec out;
    for (const auto& [kx, cx] : x)
      for (const auto& [ky, cy] : y)
        for (const auto& [k, v] : bracket(kx.first, kx.second, ky.first, ky.second)) add(out, k.first, k.second, cx * cy * v);
    return out;
  }

  /// σ(f, ξ, ε, a, b) written out symbol by symbol.
  Vec sigma(const std::vector<Scalar>& f, int xi, int eps, const Index& a, const Scalar& b, int kind,
            const Index& alpha) const {
    Vec out;
    Scalar fa(1);
    for (std::size_t i = 0; i < alpha.size(); ++i) fa *= f[i].pow(static_cast<long>(alpha[i]));
    const Scalar ia = iota(a);
    const Index ea = times(eps, alpha);
    const bool d = zero(alpha);
    switch (kind) {
      case L:
        add(out, L, ea, Scalar(eps) * fa);
        add(out, H, ea, fa * ia);
        if (d) add(out, C, alpha, Scalar(r2k::Rational(eps, 6)) * ia * ia);
        break;
      case H:
        add(out, H, ea, Scalar(xi) * fa);
        if (d) add(out, C, alpha, Scalar(r2k::Rational(xi * eps, 3)) * ia);
        break;
      case GP:
        if (xi == 1)
          add(out, GP, times(eps, plus(alpha, a)), fa * b);
        else
          add(out, GM, times(eps, plus(alpha, times(-1, a))), fa * b);
        break;
      case GM:
        if (xi == -1)
          add(out, GP, times(eps, plus(alpha, a)), Scalar(eps) * fa / b);
        else
          add(out, GM, times(eps, plus(alpha, times(-1, a))), Scalar(eps) * fa / b);
        break;
      case C: add(out, C, alpha, Scalar(eps)); break;
    }
    return out;
  }
};

inline int kind_code(r2k::Kind k) {
  switch (k) {
    case r2k::Kind::L: return L;
    case r2k::Kind::H: return H;
    case r2k::Kind::Gplus: return GP;
    case r2k::Kind::Gminus: return GM;
    default: return C;
  }
}

inline r2k::Kind kind_of(int k) {
  static const r2k::Kind kinds[] = {r2k::Kind::L, r2k::Kind::H, r2k::Kind::Gplus, r2k::Kind::Gminus,
                                    r2k::Kind::Central};
  return kinds[k];
}

inline Index index_of(const r2k::GammaElem& g) {
  Index r(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) r[i] = g[i];
  return r;
}

inline r2k::Element to_element(const Vec& v) {
  r2k::Element::TermList terms;
  for (const auto& [k, c] : v) terms.emplace_back(r2k::BasisSymbol{kind_of(k.first), r2k::GammaElem::from_coords(k.second)}, c);
  return r2k::Element::from_terms(std::move(terms));
}

inline Vec from_element(const r2k::Element& x) {
  Vec v;
  for (const auto& [s, c] : x.terms()) add(v, kind_code(s.kind), index_of(s.index), c);
  return v;
}

}  // namespace oracle
