#include "biharm/quadext.hpp"

#include <ostream>

namespace biharm {

QuadExt::QuadExt(Rational a, Rational b, Rational d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_.sign() < 0) throw UsageError("QuadExt: negative discriminant");
  if (b_.is_zero()) {
    d_ = Rational(0);
    return;
  }
  Rational root;
  if (perfect_square_root(d_, root)) {
    // collapse a + b*sqrt(s^2) to the rational a + b*s
    a_ += b_ * root;
    b_ = Rational(0);
    d_ = Rational(0);
  }
}

Rational QuadExt::common_discriminant(const QuadExt& x, const QuadExt& y) {
  if (x.b_.is_zero()) return y.d_;
  if (y.b_.is_zero()) return x.d_;
  if (x.d_ != y.d_)
    throw UsageError("QuadExt: mismatched discriminants " + x.d_.to_string() +
                     " vs " + y.d_.to_string());
  return x.d_;
}

QuadExt QuadExt::inv() const {
  if (is_zero()) throw UsageError("QuadExt: inverse of zero");
  Rational n = norm();
  if (n.is_zero())
    throw UsageError("QuadExt: zero norm (discriminant not squarefree?)");
  return QuadExt(a_ / n, -b_ / n, d_);
}

QuadExt QuadExt::pow(unsigned long e) const {
  QuadExt r(1);
  QuadExt base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::string QuadExt::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string rad = (b_.abs().is_one() ? std::string() : b_.abs().to_string() + "*") +
                    "sqrt(" + d_.to_string() + ")";
  if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + rad;
  return a_.to_string() + (b_.sign() < 0 ? " - " : " + ") + rad;
}

QuadExt QuadExt::from_string(const std::string& text) {
  // forms:  A | [-]R*sqrt(D) | A + R*sqrt(D) | A - R*sqrt(D)
  auto parse_radical = [](const std::string& s, int sign) -> QuadExt {
    std::size_t star = s.find("*sqrt(");
    Rational coeff(1);
    std::size_t open;
    if (star != std::string::npos) {
      coeff = Rational::from_string(s.substr(0, star));
      open = star + 6;
    } else if (s.rfind("sqrt(", 0) == 0) {
      open = 5;
    } else {
      throw ParseError("expected sqrt(...) term", 0);
    }
    if (s.empty() || s.back() != ')')
      throw ParseError("unterminated sqrt(...)", s.size());
    Rational d = Rational::from_string(s.substr(open, s.size() - open - 1));
    return QuadExt(Rational(0), sign < 0 ? -coeff : coeff, d);
  };

  std::string t;
  for (char ch : text)
    if (ch != ' ') t.push_back(ch);
  if (t.empty()) throw ParseError("empty quadratic literal", 0);

  if (t.find("sqrt(") == std::string::npos) return QuadExt(Rational::from_string(t));

  // split at the last top-level '+'/'-' before the radical term, if any
  std::size_t srt = t.find("sqrt(");
  std::size_t split = std::string::npos;
  int sign = 1;
  for (std::size_t i = 1; i < srt; ++i) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != '/' && t[i - 1] != '+' &&
        t[i - 1] != '-' && t[i - 1] != '*') {
      split = i;
      sign = (t[i] == '-') ? -1 : 1;
    }
  }
  if (split == std::string::npos) {
    int lead = 1;
    std::string body = t;
    if (body[0] == '-') { lead = -1; body = body.substr(1); }
    else if (body[0] == '+') { body = body.substr(1); }
    return parse_radical(body, lead);
  }
  Rational a = Rational::from_string(t.substr(0, split));
  QuadExt rad = parse_radical(t.substr(split + 1), sign);
  return QuadExt(a, rad.radical_coeff(), rad.discriminant());
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
  return os << x.to_string();
}

}  // namespace biharm
