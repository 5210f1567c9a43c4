#ifndef BIHARM_MONOMIAL_HPP
#define BIHARM_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "biharm/errors.hpp"

namespace biharm {

// Exponent vector, one entry per variable of the owning table.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial unit(std::size_t nvars, std::size_t var, uint32_t e = 1) {
    Monomial m(nvars);
    m.exps_[var] = e;
    return m;
  }

  std::size_t nvars() const { return exps_.size(); }
  uint32_t exp(std::size_t i) const { return exps_[i]; }
  const std::vector<uint32_t>& exps() const { return exps_; }

  uint32_t total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), uint32_t{0});
  }

  bool is_constant() const {
    for (uint32_t e : exps_)
      if (e != 0) return false;
    return true;
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > m.exps_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += m.exps_[i];
    return r;
  }

  // Exact quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (m.exps_[i] > r.exps_[i]) throw UsageError("Monomial: inexact quotient");
      r.exps_[i] -= m.exps_[i];
    }
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

 private:
  std::vector<uint32_t> exps_;
};

// Graded lexicographic order: compare total degree first, then exponents
// lexicographically with earlier table variables taking precedence.
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
  uint32_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
  }
  return 0;
}

// Comparator placing the grlex-largest monomial first in an ordered map.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_cmp(a, b) > 0;
  }
};

}  // namespace biharm

#endif
