#include "biharm/poly_io.hpp"

#include <cctype>
#include <sstream>

namespace biharm {

namespace {

class Parser {
 public:
  Parser(const std::string& text, VarTablePtr table)
      : text_(text), table_(std::move(table)) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Poly expr() {
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (eat('^')) {
      skip_ws();
      unsigned long e = natural();
      return b.pow(static_cast<uint32_t>(e));
    }
    return b;
  }

  Poly base() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return rational();
    if (std::isalpha(static_cast<unsigned char>(ch))) return variable();
    throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
  }

  Poly rational() {
    mpz_class num(digits());
    if (pos_ < text_.size() && text_[pos_] == '/') {
      // a '/' only continues a rational literal if digits follow directly
      std::size_t save = pos_;
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        mpz_class den(digits());
        if (den == 0) throw ParseError("zero denominator", save + 1);
        return Poly::constant(table_, Rational(num, den));
      }
      pos_ = save;
    }
    return Poly::constant(table_, Rational(num));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected digits", pos_);
    return text_.substr(start, pos_ - start);
  }

  unsigned long natural() {
    std::size_t start = pos_;
    std::string d = digits();
    if (d.size() > 9) throw ParseError("exponent too large", start);
    return std::stoul(d);
  }

  Poly variable() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    if (!table_->contains(name))
      throw ParseError("unknown variable '" + name + "'", start);
    return Poly::variable(table_, name);
  }

  const std::string& text_;
  VarTablePtr table_;
  std::size_t pos_ = 0;
};

std::string format_monomial(const Monomial& m, const VarTable& table) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m.exp(i) == 0) continue;
    if (!out.empty()) out += "*";
    out += table.name(i);
    if (m.exp(i) > 1) out += "^" + std::to_string(m.exp(i));
  }
  return out;
}

}  // namespace

Poly parse_polynomial(const std::string& text, const VarTablePtr& table) {
  return Parser(text, table).parse();
}

std::string format_polynomial(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    std::string mono = format_monomial(m, *p.table());
    if (mono.empty()) {
      out += mag.to_string();
    } else {
      if (!mag.is_one()) out += mag.to_string() + "*";
      out += mono;
    }
  }
  return out;
}

std::string format_polynomial(const PolyQE& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) out += " + ";
    first = false;
    std::string mono = format_monomial(m, *p.table());
    std::string cs = c.to_string();
    bool mixed = !c.base().is_zero() && !c.radical_coeff().is_zero();
    if (mono.empty()) {
      out += cs;
    } else {
      out += (mixed ? "(" + cs + ")" : cs) + "*" + mono;
    }
  }
  return out;
}

std::vector<std::string> scan_variable_names(const std::string& text) {
  std::vector<std::string> names;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isalpha(static_cast<unsigned char>(text[i]))) {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      std::string name = text.substr(start, i - start);
      bool seen = false;
      for (const auto& n : names) seen = seen || n == name;
      if (!seen) names.push_back(name);
    } else {
      ++i;
    }
  }
  return names;
}

}  // namespace biharm
