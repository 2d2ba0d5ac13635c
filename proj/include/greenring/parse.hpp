#pragma once

/**
 * @file parse.hpp
 * @brief Text grammar for labels and product expressions.
 *
 * Labels:
 *   L(u,i)          simple
 *   O^m[label]      syzygy shift applied to any non-projective label
 *   M+_{2l}(u,i)    plus string (braces optional); the subscript is the
 *   M-_{2l}(u,i)    full length and must be a positive even integer
 *   C_{l,q}(u,i)    band with multiplicity l and rational parameter q
 *   P(u,i)          projective
 *
 * Expressions:
 *   expr := term (('*' | tensor-sign) term)*
 *   term := atom ('^' uint)?
 *   atom := label | '(' expr ')'
 *
 * Whitespace is ignored between tokens.  Errors carry a byte position and a
 * coarse class so callers can distinguish usage mistakes from semantics.
 */

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "greenring/fusion.hpp"
#include "greenring/labels.hpp"

namespace greenring {

class ParseError : public std::runtime_error {
 public:
  enum class Code {
    syntax,             // malformed input
    bad_string_length,  // string subscript odd or < 2, or band multiplicity < 1
    zero_lambda,        // band parameter zero
    projective_vertex,  // non-projective label on a projective vertex
  };

  ParseError(Code c, size_t position, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        code(c),
        pos(position) {}

  Code code;
  size_t pos;
};

namespace detail_parse {

inline ParseError::Code map_label_error(LabelError::Code c) {
  switch (c) {
    case LabelError::Code::projective_vertex: return ParseError::Code::projective_vertex;
    case LabelError::Code::bad_length: return ParseError::Code::bad_string_length;
    case LabelError::Code::zero_lambda: return ParseError::Code::zero_lambda;
    default: return ParseError::Code::syntax;
  }
}

class Cursor {
 public:
  Cursor(const Params& p, std::string_view s) : p_(p), s_(s) {}

  ModLabel label() {
    ws();
    const size_t start = i_;
    if (at_end()) fail("expected a label");
    switch (s_[i_]) {
      case 'L': {
        ++i_;
        auto [u, i] = vertex();
        return guarded(start, [&] { return simple_label(p_, u, i); });
      }
      case 'O': {
        ++i_;
        expect('^');
        int64_t m = integer();
        expect('[');
        ModLabel inner = label();
        expect(']');
        return guarded(start, [&] { return syzygy_shift(p_, inner, m); });
      }
      case 'M': {
        ++i_;
        if (at_end() || (s_[i_] != '+' && s_[i_] != '-')) fail("expected '+' or '-' after M");
        char sign = s_[i_++];
        expect('_');
        ws();
        bool braced = accept('{');
        const size_t len_pos = i_;
        int64_t len = integer();
        if (braced) expect('}');
        if (len < 2 || len % 2 != 0)
          throw ParseError(ParseError::Code::bad_string_length, len_pos,
                           "string length must be a positive even integer");
        auto [u, i] = vertex();
        return guarded(start, [&] { return string_label(p_, sign, len / 2, u, i); });
      }
      case 'C': {
        ++i_;
        expect('_');
        expect('{');
        int64_t ell = integer();
        expect(',');
        Rational lam = rational();
        expect('}');
        auto [u, i] = vertex();
        return guarded(start, [&] { return band_label(p_, ell, lam, u, i); });
      }
      case 'P': {
        ++i_;
        auto [u, i] = vertex();
        return projective_label(p_, u, i);
      }
      default:
        fail("expected a label");
    }
    throw std::logic_error("unreachable");
  }

  GreenElement expr() {
    GreenElement acc = term();
    for (;;) {
      ws();
      if (accept('*') || accept_seq("\xE2\x8A\x97"))
        acc = tensor(p_, acc, term());
      else
        return acc;
    }
  }

  void finish() {
    ws();
    if (!at_end()) fail("unexpected trailing input");
  }

 private:
  const Params& p_;
  std::string_view s_;
  size_t i_{0};

  bool at_end() const { return i_ >= s_.size(); }

  void ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(ParseError::Code::syntax, i_, msg);
  }

  bool accept(char c) {
    ws();
    if (at_end() || s_[i_] != c) return false;
    ++i_;
    return true;
  }

  bool accept_seq(std::string_view t) {
    ws();
    if (s_.substr(i_, t.size()) != t) return false;
    i_ += t.size();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  int64_t integer() {
    ws();
    const size_t start = i_;
    bool neg = false;
    if (!at_end() && (s_[i_] == '-' || s_[i_] == '+')) neg = s_[i_++] == '-';
    size_t digits = 0;
    int64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      if (++digits > 18) throw ParseError(ParseError::Code::syntax, start, "number too large");
      v = v * 10 + (s_[i_++] - '0');
    }
    if (digits == 0) fail("expected an integer");
    return neg ? -v : v;
  }

  int64_t unsigned_integer() {
    ws();
    if (!at_end() && (s_[i_] == '-' || s_[i_] == '+')) fail("expected an unsigned integer");
    return integer();
  }

  Rational rational() {
    const size_t start = i_;
    int64_t num = integer();
    if (!accept('/')) return Rational(num);
    int64_t den = integer();
    try {
      return Rational(num, den);
    } catch (const std::domain_error&) {
      throw ParseError(ParseError::Code::syntax, start, "zero denominator");
    }
  }

  std::pair<int64_t, int64_t> vertex() {
    expect('(');
    int64_t u = integer();
    expect(',');
    int64_t i = integer();
    expect(')');
    return {u, i};
  }

  GreenElement atom() {
    ws();
    if (accept('(')) {
      GreenElement e = expr();
      expect(')');
      return e;
    }
    GreenElement e;
    add_label(e, label());
    return e;
  }

  GreenElement term() {
    GreenElement base = atom();
    ws();
    if (!accept('^')) return base;
    const size_t pos = i_;
    int64_t k = unsigned_integer();
    if (k > 1000) throw ParseError(ParseError::Code::syntax, pos, "exponent too large");
    return tensor_power(p_, base, k);
  }

  template <typename F>
  ModLabel guarded(size_t pos, F&& f) {
    try {
      return f();
    } catch (const LabelError& e) {
      throw ParseError(map_label_error(e.code), pos, e.what());
    }
  }
};

}  // namespace detail_parse

/// Parse exactly one label.
inline ModLabel parse_label(const Params& p, std::string_view s) {
  detail_parse::Cursor c(p, s);
  ModLabel l = c.label();
  c.finish();
  return l;
}

/// Parse and evaluate a product expression.
inline GreenElement parse_expression(const Params& p, std::string_view s) {
  detail_parse::Cursor c(p, s);
  GreenElement e = c.expr();
  c.finish();
  return e;
}

/// Parse a standalone rational like "3", "-4", "3/2".
inline Rational rational_from_text(std::string_view s) {
  size_t i = 0;
  auto ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto integer = [&]() -> int64_t {
    ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    size_t digits = 0;
    int64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      if (++digits > 18) throw std::invalid_argument("number too large");
      v = v * 10 + (s[i++] - '0');
    }
    if (digits == 0) throw std::invalid_argument("expected an integer");
    return neg ? -v : v;
  };
  int64_t num = integer();
  ws();
  int64_t den = 1;
  if (i < s.size() && s[i] == '/') {
    ++i;
    den = integer();
  }
  ws();
  if (i != s.size()) throw std::invalid_argument("trailing characters in rational");
  return Rational(num, den);
}

}  // namespace greenring
