#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kv/module.hpp"
#include "kv/order.hpp"

namespace kv {

struct GBStats {
  long long spairs_considered = 0;   // popped from the queue
  long long spairs_reduced = 0;      // actually sent through reduction
  long long skipped_by_criteria = 0;
  long long reductions_to_zero = 0;
};

// Reduced Gröbner basis of a submodule: monic elements with pairwise
// non-divisible lead terms, every element fully reduced against the
// others, sorted by ascending lead term.  This normal form is unique for
// a given submodule and order, so two submodules are equal iff their
// reduced bases are structurally equal.
class GroebnerBasis {
 public:
  GroebnerBasis(FreeModule ambient, MonomialOrder order,
                std::vector<ModuleElement> elements,
                std::vector<ModuleMonomial> leads, GBStats stats);

  const FreeModule& ambient() const { return ambient_; }
  const MonomialOrder& order() const { return order_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<ModuleElement>& elements() const { return elements_; }
  const ModuleElement& element(int k) const {
    return elements_[static_cast<std::size_t>(k)];
  }
  const ModuleMonomial& lead(int k) const {
    return leads_[static_cast<std::size_t>(k)];
  }
  const std::vector<ModuleMonomial>& leads() const { return leads_; }
  const GBStats& stats() const { return stats_; }

 private:
  FreeModule ambient_;
  MonomialOrder order_;
  std::vector<ModuleElement> elements_;
  std::vector<ModuleMonomial> leads_;
  GBStats stats_;
};

// Reduced basis plus expressions of its elements in terms of the input
// generators: basis.element(k) = Σ_i expressions[k][i] · generators[i].
struct TrackedBasis {
  GroebnerBasis basis;
  std::vector<std::vector<Polynomial>> expressions;
};

GroebnerBasis buchberger(const Submodule& m,
                         const MonomialOrder& order = MonomialOrder::top());
TrackedBasis buchberger_tracked(
    const Submodule& m, const MonomialOrder& order = MonomialOrder::top());

// Lead module term of v under the order; nullopt for zero.
std::optional<std::pair<ModuleMonomial, Fp>> lead_term(
    const ModuleElement& v, const MonomialOrder& order);

// Unique remainder of v modulo the basis: no remainder term is divisible
// by any basis lead.
ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& gb);

// Same, also recording the division: v = Σ_k quotients[k]·gb.element(k) +
// remainder.  quotients is resized to gb.size().
ModuleElement reduce_with_quotients(const ModuleElement& v,
                                    const GroebnerBasis& gb,
                                    std::vector<Polynomial>& quotients);

bool contains(const GroebnerBasis& gb, const ModuleElement& v);
bool contains(const Submodule& m, const ModuleElement& v);
bool submodule_equal(const Submodule& a, const Submodule& b);

}  // namespace kv
