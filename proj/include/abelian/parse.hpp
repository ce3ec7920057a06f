#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "abelian/group.hpp"

namespace abelian {

// Grammar error carrying the offending position (0-based byte offset).
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

namespace detail {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool done() {
    skip_ws();
    return pos == text.size();
  }

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected ") + what, pos);
    ++pos;
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      negative = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected an integer", pos);
    std::int64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = checked_add(checked_mul(value, 10), text[pos] - '0');
      ++pos;
    }
    (void)start;
    return negative ? checked_neg(value) : value;
  }
};

}  // namespace detail

// Group literal: `Z/m1 x Z/m2 x ... x Z/mk`, case-insensitive Z and x,
// whitespace-insensitive, each modulus a decimal integer >= 2.
inline FinAbGroup parse_group(std::string_view text) {
  detail::Cursor cur{text};
  std::vector<std::int64_t> moduli;
  for (;;) {
    cur.skip_ws();
    if (cur.peek() != 'Z' && cur.peek() != 'z')
      throw ParseError("expected 'Z'", cur.pos);
    ++cur.pos;
    cur.expect('/', "'/' after 'Z'");
    std::size_t mod_pos = cur.pos;
    std::int64_t m = cur.integer();
    if (m < 2)
      throw ParseError("modulus must be >= 2, got " + std::to_string(m), mod_pos);
    moduli.push_back(m);
    cur.skip_ws();
    if (cur.peek() == 'x' || cur.peek() == 'X') {
      ++cur.pos;
      continue;
    }
    break;
  }
  if (!cur.done()) throw ParseError("unexpected trailing input", cur.pos);
  return FinAbGroup(std::move(moduli));
}

// Element literal: `(a1,a2,...,ak)`, or a bare integer when the group has
// rank 1. Coordinates are reduced modulo the group's moduli.
inline GroupElement parse_element(std::string_view text, const FinAbGroup& group) {
  detail::Cursor cur{text};
  std::vector<std::int64_t> coords;
  cur.skip_ws();
  if (cur.peek() == '(') {
    ++cur.pos;
    if (!cur.accept(')')) {
      for (;;) {
        coords.push_back(cur.integer());
        if (cur.accept(',')) continue;
        cur.expect(')', "')' or ','");
        break;
      }
    }
  } else {
    if (group.rank() != 1)
      throw ParseError("bare coordinates are only allowed for rank-1 groups; expected '('",
                       cur.pos);
    coords.push_back(cur.integer());
  }
  if (!cur.done()) throw ParseError("unexpected trailing input", cur.pos);
  if (coords.size() != group.rank())
    throw ParseError("expected " + std::to_string(group.rank()) + " coordinates, got " +
                         std::to_string(coords.size()),
                     0);
  return group.element(std::move(coords));
}

inline std::string to_literal(const FinAbGroup& group) {
  if (group.is_trivial()) return "0";
  std::string out;
  for (std::size_t i = 0; i < group.rank(); ++i) {
    if (i) out += " x ";
    out += "Z/" + std::to_string(group.moduli()[i]);
  }
  return out;
}

inline std::string to_literal(const GroupElement& x) {
  if (x.rank() == 1) return std::to_string(x.coords[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < x.rank(); ++i) {
    if (i) out += ",";
    out += std::to_string(x.coords[i]);
  }
  return out + ")";
}

}  // namespace abelian
