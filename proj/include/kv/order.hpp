#pragma once

#include <memory>
#include <vector>

#include "kv/monomial.hpp"

namespace kv {

// Monomial together with the free-module component it lives in.
struct ModuleMonomial {
  Monomial mono;
  int position = 0;
  bool operator==(const ModuleMonomial&) const = default;
};

// Order on module monomials.  Three flavours:
//  * top: term-over-position — compare monomials by grevlex first, break
//    ties by position (lower position wins).  The default everywhere.
//  * pot: position-over-term — lower position dominates, grevlex breaks.
//  * schreyer: induced by a list of inducing module monomials L_j in a
//    parent module: (m, j) ≥ (m', j') iff m·L_j ≥ m'·L_j' under top in
//    the parent, ties by lower index j.  Used for syzygy modules.
class MonomialOrder {
 public:
  static MonomialOrder top();
  static MonomialOrder pot();
  static MonomialOrder schreyer(std::vector<ModuleMonomial> inducing);

  // negative / zero / positive for a < b / a == b / a > b
  int cmp(const ModuleMonomial& a, const ModuleMonomial& b) const;

  bool is_schreyer() const { return kind_ == Kind::schreyer; }

 private:
  enum class Kind { top, pot, schreyer };
  explicit MonomialOrder(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::shared_ptr<const std::vector<ModuleMonomial>> inducing_;
};

}  // namespace kv
