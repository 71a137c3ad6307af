#include "grodeg/poly_text.hpp"

#include <cctype>

namespace grodeg {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const Field& field, int nvars,
         const std::string& file, int line)
      : text_(text), field_(field), nvars_(nvars), file_(file), line_(line) {}

  Polynomial run() {
    skip_ws();
    if (eof()) fail("empty polynomial");
    std::vector<Term> terms;
    bool negative = take_sign(false);
    terms.push_back(parse_term(negative));
    skip_ws();
    while (!eof()) {
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      terms.push_back(parse_term(c == '-'));
      skip_ws();
    }
    return Polynomial::from_terms(field_, nvars_, std::move(terms));
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(file_, line_, static_cast<int>(pos_) + 1, msg);
  }

  bool take_sign(bool mandatory) {
    if (!eof() && (peek() == '+' || peek() == '-')) {
      bool neg = peek() == '-';
      ++pos_;
      skip_ws();
      return neg;
    }
    if (mandatory) fail("expected sign");
    return false;
  }

  long parse_integer() {
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (1L << 56)) fail("integer literal too large");
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    return v;
  }

  Term parse_term(bool negative) {
    Scalar coeff = Scalar::one(field_);
    Monomial mono = Monomial::one(nvars_);
    bool saw_anything = false;
    if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      size_t at = pos_;
      long num = parse_integer();
      long den = 1;
      if (!eof() && peek() == '/') {
        ++pos_;
        den = parse_integer();
      }
      try {
        coeff = Scalar::from_fraction(field_, num, den);
      } catch (const DomainError& e) {
        pos_ = at;
        fail(e.what());
      }
      saw_anything = true;
      skip_ws();
      if (!eof() && peek() == '*') {
        ++pos_;
        skip_ws();
        mono = parse_factors();
      }
    } else {
      mono = parse_factors();
      saw_anything = true;
    }
    if (!saw_anything) fail("expected a term");
    if (negative) coeff = -coeff;
    return Term{mono, coeff};
  }

  Monomial parse_factors() {
    Monomial mono = parse_factor();
    skip_ws();
    while (!eof() && peek() == '*') {
      ++pos_;
      skip_ws();
      mono = mono * parse_factor();
      skip_ws();
    }
    return mono;
  }

  Monomial parse_factor() {
    if (eof() || peek() != 'X') fail("expected a variable X<i>");
    ++pos_;
    size_t at = pos_;
    long idx = parse_integer();
    if (idx >= nvars_) {
      pos_ = at - 1;
      fail("variable X" + std::to_string(idx) + " out of range, ring has " +
           std::to_string(nvars_) + " variables");
    }
    uint32_t e = 1;
    if (!eof() && peek() == '^') {
      ++pos_;
      long raw = parse_integer();
      if (raw > 1'000'000) fail("exponent too large");
      e = static_cast<uint32_t>(raw);
    }
    return Monomial::variable(nvars_, static_cast<int>(idx), e);
  }

  std::string_view text_;
  Field field_;
  int nvars_;
  std::string file_;
  int line_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Field& field, int nvars,
                            const std::string& file, int line) {
  return Parser(text, field, nvars, file, line).run();
}

}  // namespace grodeg
