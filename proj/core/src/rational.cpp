#include "biharm/rational.hpp"

#include <cctype>
#include <ostream>

namespace biharm {

Rational Rational::from_string(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal", 0);
  std::size_t pos = 0;
  if (text[pos] == '+' || text[pos] == '-') ++pos;
  std::size_t digits_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits_start) throw ParseError("expected digits in rational literal", pos);
  mpz_class num(text.substr(0, pos));
  if (pos == text.size()) return Rational(num, mpz_class(1));
  if (text[pos] != '/') throw ParseError("unexpected character in rational literal", pos);
  ++pos;
  std::size_t den_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == den_start || pos != text.size())
    throw ParseError("expected positive integer denominator", pos);
  mpz_class den(text.substr(den_start));
  if (den == 0) throw UsageError("Rational: zero denominator");
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.to_string();
}

mpz_class int_gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

mpz_class int_lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool perfect_square_root(const mpz_class& n, mpz_class& root) {
  if (n < 0) return false;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return true;
}

bool perfect_square_root(const Rational& q, Rational& root) {
  if (q.sign() < 0) return false;
  mpz_class rn, rd;
  if (!perfect_square_root(q.num(), rn)) return false;
  if (!perfect_square_root(q.den(), rd)) return false;
  root = Rational(rn, rd);
  return true;
}

}  // namespace biharm
