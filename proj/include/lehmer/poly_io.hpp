#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lehmer/poly.hpp"

namespace lehmer {

/// Canonical text: descending powers, explicit signs, `*` between a
/// coefficient and the variable, rationals as `a/b`. Parses back exactly.
template <class Field>
std::string to_string(const Poly<Field>& a, char var = 'x') {
  if (a.is_zero()) return "0";
  const Field& f = a.field();
  std::string out;
  const auto cs = a.coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) {
    const auto& c = cs[k];
    if (f.is_zero(c)) continue;
    bool negative = f.is_negative(c);
    auto mag = negative ? f.neg(c) : c;
    if (negative)
      out += '-';
    else if (!out.empty())
      out += '+';
    bool unit_mag = f.is_one(mag);
    if (k == 0) {
      out += f.to_string(mag);
      continue;
    }
    if (!unit_mag) {
      out += f.to_string(mag);
      out += '*';
    }
    out += var;
    if (k > 1) {
      out += '^';
      out += std::to_string(k);
    }
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    bool gap = false;
    for (char ch : text) {
      const auto uc = static_cast<unsigned char>(ch);
      if (std::isspace(uc)) {
        gap = !s_.empty();
        continue;
      }
      // "3 4" must not silently read as 34
      if (gap && std::isdigit(uc) && std::isdigit(static_cast<unsigned char>(s_.back()))) split_number_ = true;
      gap = false;
      s_ += ch;
    }
  }

  template <class Field>
  Poly<Field> parse(const Field& field) {
    if (s_.empty()) fail("empty expression");
    if (split_number_) fail("whitespace inside a number");
    Poly<Field> acc(field);
    bool first = true;
    while (pos_ < s_.size() || first) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto t = term(field);
      acc += negative ? -t : t;
      first = false;
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  mpz_class uint_literal() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  std::size_t exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    mpz_class e = uint_literal();
    if (e > 1'000'000) fail("exponent too large");
    return e.get_ui();
  }

  template <class Field>
  Poly<Field> term(const Field& field) {
    if (peek() == 'x') {
      ++pos_;
      return Poly<Field>::monomial(field, field.one(), exponent());
    }
    mpz_class num = uint_literal();
    mpz_class den = 1;
    if (peek() == '/') {
      ++pos_;
      den = uint_literal();
      if (den == 0) fail("zero denominator");
    }
    auto c = field.from_fraction(num, den);
    bool star = false;
    if (peek() == '*') {
      ++pos_;
      star = true;
    }
    if (peek() == 'x') {
      ++pos_;
      return Poly<Field>::monomial(field, c, exponent());
    }
    if (star) fail("expected 'x' after '*'");
    return Poly<Field>::constant(field, c);
  }

  std::string s_;
  std::size_t pos_ = 0;
  bool split_number_ = false;
};

}  // namespace detail

/// Grammar: expr := ['+'|'-'] term (('+'|'-') term)*
///          term := coef ['*'] 'x' ['^' uint] | coef | 'x' ['^' uint]
///          coef := uint | uint '/' uint
/// Whitespace is ignored; `3x` means `3*x`.
template <class Field>
Poly<Field> parse_poly(std::string_view text, const Field& field) {
  return detail::PolyParser(text).parse(field);
}

}  // namespace lehmer
