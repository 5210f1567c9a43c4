#ifndef BIHARM_VAR_TABLE_HPP
#define BIHARM_VAR_TABLE_HPP

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "biharm/errors.hpp"

namespace biharm {

// Ordered list of variable names.  The order is fixed at creation and
// defines the variable precedence of the monomial order (earlier = higher).
class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!valid_name(names_[i]))
        throw UsageError("VarTable: invalid variable name '" + names_[i] + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j])
          throw UsageError("VarTable: duplicate variable name '" + names_[i] + "'");
    }
  }

  static std::shared_ptr<const VarTable> make(std::vector<std::string> names) {
    return std::make_shared<const VarTable>(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  bool contains(const std::string& name) const {
    for (const auto& n : names_)
      if (n == name) return true;
    return false;
  }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    throw UsageError("VarTable: unknown variable '" + name + "'");
  }

  friend bool operator==(const VarTable& a, const VarTable& b) {
    return a.names_ == b.names_;
  }

  static bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char ch : s)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
  }

 private:
  std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace biharm

#endif
