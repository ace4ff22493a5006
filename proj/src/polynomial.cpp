#include "r2k/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace r2k {

namespace {

bool term_greater(const Term& a, const Term& b) { return grlex_compare(a.mono, b.mono) > 0; }

// Sorts and merges equal monomials, dropping zero coefficients.
std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    t.coeff.canonicalize();
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  return out;
}

template <class Combine>
Poly merge(const Poly& a, const Poly& b, Combine&& sign_b) {
  std::vector<Term> out;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size() || (i < ta.size() && grlex_compare(ta[i].mono, tb[j].mono) > 0)) {
      out.push_back(ta[i++]);
    } else if (i == ta.size() || grlex_compare(ta[i].mono, tb[j].mono) < 0) {
      out.push_back({tb[j].mono, sign_b(tb[j].coeff)});
      ++j;
    } else {
      Rational c = ta[i].coeff + sign_b(tb[j].coeff);
      if (sgn(c) != 0) out.push_back({ta[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return Poly::from_terms(std::move(out));
}

}  // namespace

Poly::Poly(const Rational& c) {
  if (sgn(c) == 0) return;
  terms_.push_back({Monomial{}, c});
  terms_.back().coeff.canonicalize();
}

Poly Poly::variable(std::size_t var, unsigned power) {
  Monomial m;
  m.exp[var] = static_cast<std::uint16_t>(power);
  Poly p;
  p.terms_.push_back({m, Rational(1)});
  return p;
}

// Trusted constructor for already canonical term lists produced internally.
Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  bool sorted = true;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (sgn(terms[i].coeff) == 0 || (i > 0 && !term_greater(terms[i - 1], terms[i]))) {
      sorted = false;
      break;
    }
  }
  p.terms_ = sorted ? std::move(terms) : canonicalize(std::move(terms));
  return p;
}

bool Poly::is_one() const noexcept {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

Rational Poly::constant_value() const { return terms_.empty() ? Rational(0) : terms_[0].coeff; }

unsigned Poly::degree_in(std::size_t var) const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.exp[var]);
  return d;
}

Poly Poly::coeff_in(std::size_t var, unsigned k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.exp[var] != k) continue;
    Term c = t;
    c.mono.exp[var] = 0;
    out.push_back(std::move(c));
  }
  return from_terms(std::move(out));
}

std::size_t first_common_var(const Poly& a, const Poly& b) noexcept {
  for (std::size_t v = 0; v < kMaxVars; ++v)
    if (a.contains_var(v) || b.contains_var(v)) return v;
  return kMaxVars;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  return merge(a, b, [](const Rational& c) { return c; });
}

Poly operator-(const Poly& a, const Poly& b) {
  if (b.is_zero()) return a;
  return merge(a, b, [](const Rational& c) { return Rational(-c); });
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].mono, b.terms_[0].coeff);
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) out.push_back({x.mono * y.mono, x.coeff * y.coeff});
  Poly p;
  p.terms_ = canonicalize(std::move(out));
  return p;
}

Poly Poly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return Poly();
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Poly Poly::times_monomial(const Monomial& m, const Rational& c) const {
  if (sgn(c) == 0) return Poly();
  Poly p = *this;
  for (auto& t : p.terms_) {
    t.mono = t.mono * m;
    t.coeff *= c;
  }
  return p;
}

bool divide_exact(const Poly& a, const Poly& b, Poly& q) {
  if (b.is_zero()) return false;
  std::vector<Term> quotient;
  Poly rem = a;
  const Term& lead = b.leading_term();
  while (!rem.is_zero()) {
    const Term& r = rem.leading_term();
    if (!lead.mono.divides(r.mono)) return false;
    Term t{r.mono / lead.mono, r.coeff / lead.coeff};
    rem = rem - b.times_monomial(t.mono, t.coeff);
    quotient.push_back(std::move(t));
  }
  // Quotient terms come out in decreasing order already.
  q = Poly::from_terms(std::move(quotient));
  return true;
}

Poly Poly::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  Rational inv = 1 / leading_coeff();
  return scaled(inv);
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (t.mono.exp[i] == 0) continue;
      Rational x = i < point.size() ? point[i] : Rational(0);
      x.canonicalize();
      Rational pw = 1;
      for (unsigned k = 0; k < t.mono.exp[i]; ++k) pw *= x;
      v *= pw;
    }
    sum += v;
  }
  return sum;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var) {
  const unsigned db = b.degree_in(var);
  const Poly lcb = b.coeff_in(var, db);
  Poly r = a;
  while (!r.is_zero()) {
    const unsigned dr = r.degree_in(var);
    if (dr < db) break;
    Poly lcr = r.coeff_in(var, dr);
    r = lcb * r - lcr * Poly::variable(var, dr - db) * b;
  }
  return r;
}

namespace {

// Content with respect to `var`: gcd of the coefficients of all powers of var.
Poly content_in(const Poly& p, std::size_t var) {
  const unsigned d = p.degree_in(var);
  Poly g;
  for (unsigned k = 0; k <= d; ++k) {
    Poly c = p.coeff_in(var, k);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Poly primitive_part(const Poly& p, std::size_t var) {
  if (p.is_zero()) return p;
  Poly cont = content_in(p, var);
  Poly q;
  if (cont.is_one()) return p.monic();
  divide_exact(p, cont, q);
  return q.monic();
}

}  // namespace

// Recursive gcd: split off the content in the lowest variable, then run a
// primitive pseudo-remainder sequence on the primitive parts.
Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a == b) return a.monic();

  const std::size_t var = first_common_var(a, b);
  Poly ca = content_in(a, var);
  Poly cb = content_in(b, var);
  Poly g_content = gcd(ca, cb);

  Poly pa, pb;
  divide_exact(a, ca, pa);
  divide_exact(b, cb, pb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);

  while (!pb.is_zero()) {
    if (pb.degree_in(var) == 0) {
      // Primitive and free of var: a unit.
      pa = Poly(1);
      break;
    }
    Poly r = pseudo_remainder(pa, pb, var);
    pa = std::move(pb);
    pb = primitive_part(r, var);
  }
  return (primitive_part(pa, var) * g_content).monic();
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (m.exp[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'u' + std::to_string(i + 1);
    if (m.exp[i] > 1) s += '^' + std::to_string(m.exp[i]);
  }
  return s;
}

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    Rational mag = abs(t.coeff);
    std::string vars = monomial_text(t.mono);
    if (vars.empty()) {
      s += mag.get_str();
    } else if (mag == 1) {
      s += vars;
    } else {
      s += mag.get_str() + '*' + vars;
    }
  }
  return s;
}

}  // namespace r2k
