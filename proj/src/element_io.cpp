#include "r2k/element_io.hpp"

#include "r2k/error.hpp"
#include "r2k/text_cursor.hpp"

namespace r2k {

std::string to_string(const BasisSymbol& s) {
  if (s.kind == Kind::Central) return "C";
  return std::string(kind_name(s.kind)) + "(" + coords_text(s.index) + ")";
}

namespace {

bool single_monomial(const Scalar& c) { return c.denominator().is_one() && c.numerator().terms().size() == 1; }

}  // namespace

std::string to_string(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : x.terms()) {
    const std::string sym = to_string(s);
    if (single_monomial(c)) {
      const bool negative = sgn(c.numerator().leading_coeff()) < 0;
      const Scalar mag = negative ? -c : c;
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      out += mag.is_one() ? sym : to_string(mag) + "*" + sym;
    } else {
      if (!first) out += " + ";
      const std::string text = to_string(c);
      // Fraction text is already parenthesized on both sides.
      out += (c.denominator().is_one() ? "(" + text + ")" : text) + "*" + sym;
    }
    first = false;
  }
  return out;
}

namespace {

BasisSymbol parse_symbol(TextCursor& cur, std::size_t rank) {
  const char c = cur.peek();
  if (c == 'C') {
    cur.expect('C');
    return BasisSymbol::central(rank);
  }
  Kind kind;
  if (c == 'L') {
    cur.expect('L');
    kind = Kind::L;
  } else if (c == 'H') {
    cur.expect('H');
    kind = Kind::H;
  } else if (c == 'G') {
    cur.expect('G');
    if (cur.consume('+'))
      kind = Kind::Gplus;
    else if (cur.consume('-'))
      kind = Kind::Gminus;
    else
      cur.fail("expected '+' or '-' after G");
  } else {
    cur.fail("expected a basis symbol");
  }
  cur.expect('(');
  const std::size_t at = cur.position();
  auto coords = cur.parse_int_list();
  cur.expect(')');
  if (coords.size() != rank)
    throw Error(ErrorCode::RankMismatch, "index at position " + std::to_string(at) + " has " +
                                             std::to_string(coords.size()) + " coordinates, expected " +
                                             std::to_string(rank));
  return {kind, GammaElem::from_coords(coords)};
}

bool starts_symbol(char c) { return c == 'L' || c == 'H' || c == 'G' || c == 'C'; }

}  // namespace

Element parse_element(std::string_view text, std::size_t rank, std::size_t num_vars) {
  TextCursor cur(text);
  if (cur.peek() == '0' && cur.peek_second() == '\0') return Element();
  Element::TermList terms;
  bool first = true;
  while (first || !cur.at_end()) {
    bool negative = false;
    if (cur.peek() == '+' || cur.peek() == '-') {
      negative = cur.peek() == '-';
      cur.consume(cur.peek());
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    Scalar coeff(1);
    if (!starts_symbol(cur.peek())) {
      coeff = cur.peek() == '(' ? cur.parse_scalar(num_vars) : Scalar(cur.parse_monomial(num_vars));
      cur.expect('*');
    }
    BasisSymbol s = parse_symbol(cur, rank);
    terms.emplace_back(std::move(s), negative ? -coeff : coeff);
  }
  return Element::from_terms(std::move(terms));
}

}  // namespace r2k
