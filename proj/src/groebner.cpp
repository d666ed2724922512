// Buchberger's algorithm for submodules of graded free modules over
// GF(p)[x,y,z], with optional tracking of how each basis element is
// expressed in the input generators (the raw material for syzygies).
//
// S-pairs are formed only between elements whose lead terms share a
// module position.  The product (coprime-lcm) criterion is applied only
// in rank-1 ambients, where it is Buchberger's classical first
// criterion; at higher rank the tails in other positions invalidate it.
// The chain criterion is sound at any rank.  Pairs are processed in
// ascending module-degree order, so for homogeneous input the run is a
// degree-by-degree computation.

#include "kv/groebner.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <tuple>

#include "kv/error.hpp"

namespace kv {

namespace {

struct WorkElem {
  ModuleElement v;                    // monic
  ModuleMonomial lt;
  std::vector<Polynomial> expr;       // v = Σ expr[i]·gen[i] (if tracking)
};

// degree used for pair scheduling; module degree of the would-be S-pair
int pair_degree(const FreeModule& amb, const Monomial& lcm_mono, int pos) {
  return lcm_mono.degree() + amb.twists[static_cast<std::size_t>(pos)];
}

struct PairQueue {
  // (degree, i, j) with i < j; smallest degree first
  using Key = std::tuple<int, int, int>;
  std::priority_queue<Key, std::vector<Key>, std::greater<Key>> q;
};

ModuleElement reduce_against(const ModuleElement& v,
                             const std::vector<WorkElem>& basis,
                             const MonomialOrder& order,
                             std::vector<Polynomial>* quotients) {
  ModuleElement rem = ModuleElement::zero(v.ambient());
  ModuleElement cur = v;
  for (;;) {
    auto lt = lead_term(cur, order);
    if (!lt) break;
    const auto& [mm, lc] = *lt;
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const WorkElem& b = basis[k];
      if (b.lt.position != mm.position || !b.lt.mono.divides(mm.mono))
        continue;
      Monomial q = b.lt.mono.quotient_of(mm.mono);
      cur -= b.v.times_term(lc, q);
      if (quotients) (*quotients)[k] += Polynomial::term(lc, q);
      reduced = true;
      break;
    }
    if (!reduced) {
      // lead term is irreducible: move it to the remainder
      ModuleElement t = ModuleElement::basis_vector(v.ambient(), mm.position)
                            .times_term(lc, mm.mono);
      rem += t;
      cur -= t;
    }
  }
  return rem;
}

std::vector<Polynomial> zero_expr(std::size_t n) {
  return std::vector<Polynomial>(n);
}

// Core Buchberger run; returns the reduced basis as WorkElems.
std::pair<std::vector<WorkElem>, GBStats> run(const Submodule& m,
                                              const MonomialOrder& order,
                                              bool track) {
  const std::size_t ngens = m.generators.size();
  std::vector<WorkElem> basis;
  GBStats stats;

  for (std::size_t i = 0; i < ngens; ++i) {
    const ModuleElement& g = m.generators[i];
    if (g.ambient() != m.ambient)
      throw InputError("generator does not live in the stated ambient");
    auto lt = lead_term(g, order);
    if (!lt) continue;  // zero generator: contributes nothing
    WorkElem e{g.scaled(lt->second.inverse()), lt->first, {}};
    if (track) {
      e.expr = zero_expr(ngens);
      e.expr[i] = Polynomial::term(lt->second.inverse(), Monomial::one());
    }
    basis.push_back(std::move(e));
  }

  PairQueue pairs;
  auto push_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i) {
      const auto& a = basis[static_cast<std::size_t>(i)].lt;
      const auto& b = basis[static_cast<std::size_t>(j)].lt;
      if (a.position != b.position) continue;
      Monomial l = lcm(a.mono, b.mono);
      pairs.q.push({pair_degree(m.ambient, l, a.position), i, j});
    }
  };
  for (int j = 0; j < static_cast<int>(basis.size()); ++j) push_pairs_for(j);

  std::set<std::pair<int, int>> treated;
  const bool rank_one = m.ambient.rank() == 1;

  while (!pairs.q.empty()) {
    auto [deg, i, j] = pairs.q.top();
    pairs.q.pop();
    (void)deg;
    treated.insert({i, j});
    ++stats.spairs_considered;

    const WorkElem& gi = basis[static_cast<std::size_t>(i)];
    const WorkElem& gj = basis[static_cast<std::size_t>(j)];
    Monomial l = lcm(gi.lt.mono, gj.lt.mono);

    if (rank_one && coprime(gi.lt.mono, gj.lt.mono)) {
      ++stats.skipped_by_criteria;
      continue;
    }
    bool chain = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !chain; ++k) {
      if (k == i || k == j) continue;
      const auto& ck = basis[static_cast<std::size_t>(k)].lt;
      if (ck.position != gi.lt.position || !ck.mono.divides(l)) continue;
      auto key = [](int a, int b) {
        return std::pair<int, int>{std::min(a, b), std::max(a, b)};
      };
      chain = treated.count(key(i, k)) && treated.count(key(j, k));
    }
    if (chain) {
      ++stats.skipped_by_criteria;
      continue;
    }

    ++stats.spairs_reduced;
    Monomial ui = gi.lt.mono.quotient_of(l);
    Monomial uj = gj.lt.mono.quotient_of(l);
    ModuleElement s =
        gi.v.times_term(Fp::one(), ui) - gj.v.times_term(Fp::one(), uj);
    std::vector<Polynomial> quot;
    if (track) quot.assign(basis.size(), {});
    ModuleElement nf = reduce_against(s, basis, order, track ? &quot : nullptr);
    auto lt = lead_term(nf, order);
    if (!lt) {
      ++stats.reductions_to_zero;
      continue;
    }
    WorkElem e{nf.scaled(lt->second.inverse()), lt->first, {}};
    if (track) {
      std::vector<Polynomial> expr = zero_expr(ngens);
      for (std::size_t n = 0; n < ngens; ++n) {
        Polynomial acc = gi.expr[n].times_term(Fp::one(), ui) -
                         gj.expr[n].times_term(Fp::one(), uj);
        for (std::size_t k = 0; k < quot.size(); ++k)
          acc -= quot[k] * basis[k].expr[n];
        expr[n] = acc.scaled(lt->second.inverse());
      }
      e.expr = std::move(expr);
    }
    basis.push_back(std::move(e));
    push_pairs_for(static_cast<int>(basis.size()) - 1);
  }

  // Minimalize: keep only elements whose lead no kept lead divides.
  std::vector<int> by_lead(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    by_lead[k] = static_cast<int>(k);
  std::sort(by_lead.begin(), by_lead.end(), [&](int a, int b) {
    int c = order.cmp(basis[static_cast<std::size_t>(a)].lt,
                      basis[static_cast<std::size_t>(b)].lt);
    return c != 0 ? c < 0 : a < b;
  });
  std::vector<WorkElem> kept;
  for (int idx : by_lead) {
    const WorkElem& cand = basis[static_cast<std::size_t>(idx)];
    bool redundant = false;
    for (const WorkElem& h : kept)
      if (h.lt.position == cand.lt.position &&
          h.lt.mono.divides(cand.lt.mono)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(cand);
  }

  // Tail-reduce each element against the others.  Divisibility checks use
  // only lead terms, which are pairwise non-divisible, so a single pass
  // leaves every element fully reduced: the canonical reduced basis.
  for (std::size_t k = 0; k < kept.size(); ++k) {
    std::vector<WorkElem> others;
    others.reserve(kept.size() - 1);
    for (std::size_t mth = 0; mth < kept.size(); ++mth)
      if (mth != k) others.push_back(kept[mth]);
    std::vector<Polynomial> quot;
    if (track) quot.assign(others.size(), {});
    ModuleElement nf =
        reduce_against(kept[k].v, others, order, track ? &quot : nullptr);
    auto lt = lead_term(nf, order);
    if (!lt || !(lt->first == kept[k].lt))
      throw EngineError("tail reduction moved a minimal lead term");
    kept[k].v = nf.scaled(lt->second.inverse());
    if (track) {
      for (std::size_t n = 0; n < ngens; ++n) {
        Polynomial acc = kept[k].expr[n];
        for (std::size_t o = 0; o < others.size(); ++o)
          acc -= quot[o] * others[o].expr[n];
        kept[k].expr[n] = acc.scaled(lt->second.inverse());
      }
    }
  }

  return {std::move(kept), stats};
}

TrackedBasis assemble(const Submodule& m, const MonomialOrder& order,
                      bool track) {
  auto [kept, stats] = run(m, order, track);
  std::vector<ModuleElement> elems;
  std::vector<ModuleMonomial> leads;
  std::vector<std::vector<Polynomial>> exprs;
  for (WorkElem& e : kept) {
    elems.push_back(std::move(e.v));
    leads.push_back(e.lt);
    if (track) exprs.push_back(std::move(e.expr));
  }
  return TrackedBasis{
      GroebnerBasis(m.ambient, order, std::move(elems), std::move(leads),
                    stats),
      std::move(exprs)};
}

}  // namespace

GroebnerBasis::GroebnerBasis(FreeModule ambient, MonomialOrder order,
                             std::vector<ModuleElement> elements,
                             std::vector<ModuleMonomial> leads, GBStats stats)
    : ambient_(std::move(ambient)),
      order_(std::move(order)),
      elements_(std::move(elements)),
      leads_(std::move(leads)),
      stats_(stats) {}

GroebnerBasis buchberger(const Submodule& m, const MonomialOrder& order) {
  return assemble(m, order, /*track=*/false).basis;
}

TrackedBasis buchberger_tracked(const Submodule& m,
                                const MonomialOrder& order) {
  return assemble(m, order, /*track=*/true);
}

std::optional<std::pair<ModuleMonomial, Fp>> lead_term(
    const ModuleElement& v, const MonomialOrder& order) {
  std::optional<std::pair<ModuleMonomial, Fp>> best;
  for (int j = 0; j < v.ambient().rank(); ++j) {
    const Polynomial& c = v[j];
    if (c.is_zero()) continue;
    // within one component every order here restricts to grevlex, so the
    // component's lead term is its largest module term
    ModuleMonomial mm{c.lead().mono, j};
    if (!best || order.cmp(mm, best->first) > 0)
      best = {{mm, c.lead().coeff}};
  }
  return best;
}

ModuleElement normal_form(const ModuleElement& v, const GroebnerBasis& gb) {
  std::vector<Polynomial> ignored;
  return reduce_with_quotients(v, gb, ignored);
}

ModuleElement reduce_with_quotients(const ModuleElement& v,
                                    const GroebnerBasis& gb,
                                    std::vector<Polynomial>& quotients) {
  if (v.ambient() != gb.ambient())
    throw InputError("element does not live in the basis ambient");
  std::vector<WorkElem> basis;
  basis.reserve(static_cast<std::size_t>(gb.size()));
  for (int k = 0; k < gb.size(); ++k)
    basis.push_back({gb.element(k), gb.lead(k), {}});
  quotients.assign(basis.size(), {});
  return reduce_against(v, basis, gb.order(), &quotients);
}

bool contains(const GroebnerBasis& gb, const ModuleElement& v) {
  return normal_form(v, gb).is_zero();
}

bool contains(const Submodule& m, const ModuleElement& v) {
  return contains(buchberger(m), v);
}

bool submodule_equal(const Submodule& a, const Submodule& b) {
  if (a.ambient != b.ambient) return false;
  GroebnerBasis ga = buchberger(a);
  GroebnerBasis gb = buchberger(b);
  return ga.elements() == gb.elements();
}

}  // namespace kv
