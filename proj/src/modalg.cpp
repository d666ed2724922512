// Module algebra on top of the Gröbner engine: syzygies via tracked
// bases, intersections and quotients via syzygies, saturation by the
// irrelevant ideal, minimal generators and minimal graded resolutions.

#include "kv/modalg.hpp"

#include <algorithm>

#include "kv/error.hpp"

namespace kv {

namespace {

void require_homogeneous_nonzero(const Submodule& m, const char* who) {
  for (const ModuleElement& g : m.generators) {
    if (g.is_zero())
      throw InputError(std::string(who) + ": zero generator not allowed");
    if (!g.is_homogeneous())
      throw InputError(std::string(who) + ": generators must be homogeneous");
  }
}

Submodule drop_zero_generators(const Submodule& m) {
  Submodule out{m.ambient, {}};
  for (const ModuleElement& g : m.generators)
    if (!g.is_zero()) out.generators.push_back(g);
  return out;
}

}  // namespace

Submodule koszul_submodule(const std::vector<Polynomial>& f) {
  if (f.size() < 2)
    throw InputError("Koszul submodule needs at least two generators");
  FreeModule amb;
  for (const Polynomial& fi : f) {
    auto d = fi.homogeneous_degree();
    if (!d)
      throw InputError(
          "Koszul submodule needs nonzero homogeneous generators");
    amb.twists.push_back(*d);
  }
  Submodule k{amb, {}};
  for (std::size_t j = 0; j < f.size(); ++j)
    for (std::size_t l = j + 1; l < f.size(); ++l) {
      ModuleElement g = ModuleElement::basis_vector(amb, static_cast<int>(j))
                            .times(f[l]) -
                        ModuleElement::basis_vector(amb, static_cast<int>(l))
                            .times(f[j]);
      k.generators.push_back(std::move(g));
    }
  return k;
}

Submodule syzygies(const Submodule& m) {
  require_homogeneous_nonzero(m, "syzygies");
  FreeModule coords{m.generator_degrees()};
  Submodule out{coords, {}};
  if (m.generators.empty()) return out;

  TrackedBasis tb = buchberger_tracked(m);
  const GroebnerBasis& h = tb.basis;
  const auto& expr = tb.expressions;  // h.element(k) = Σ expr[k][i]·gen_i
  const std::size_t ngens = m.generators.size();

  auto syzygy_from = [&](const std::vector<Polynomial>& tau) {
    // coefficients tau over basis elements → coefficients over generators
    std::vector<Polynomial> comps(ngens);
    for (std::size_t k = 0; k < tau.size(); ++k) {
      if (tau[k].is_zero()) continue;
      for (std::size_t i = 0; i < ngens; ++i)
        comps[i] += tau[k] * expr[k][i];
    }
    ModuleElement s(coords, std::move(comps));
    if (!s.is_zero()) out.generators.push_back(std::move(s));
  };

  // Schreyer generators: one syzygy per same-position S-pair of the basis
  for (int k = 0; k < h.size(); ++k)
    for (int l = k + 1; l < h.size(); ++l) {
      if (h.lead(k).position != h.lead(l).position) continue;
      Monomial lc = lcm(h.lead(k).mono, h.lead(l).mono);
      Monomial u = h.lead(k).mono.quotient_of(lc);
      Monomial v = h.lead(l).mono.quotient_of(lc);
      ModuleElement s = h.element(k).times_term(Fp::one(), u) -
                        h.element(l).times_term(Fp::one(), v);
      std::vector<Polynomial> q;
      ModuleElement rem = reduce_with_quotients(s, h, q);
      if (!rem.is_zero())
        throw EngineError("S-pair of a Gröbner basis did not reduce to zero");
      std::vector<Polynomial> tau(static_cast<std::size_t>(h.size()));
      for (std::size_t t = 0; t < tau.size(); ++t) tau[t] = -q[t];
      tau[static_cast<std::size_t>(k)] += Polynomial::term(Fp::one(), u);
      tau[static_cast<std::size_t>(l)] -= Polynomial::term(Fp::one(), v);
      syzygy_from(tau);
    }

  // Relations expressing that the generators and the basis span the same
  // submodule: gen_i − (its expression through the basis) is a syzygy.
  for (std::size_t i = 0; i < ngens; ++i) {
    std::vector<Polynomial> q;
    ModuleElement rem = reduce_with_quotients(m.generators[i], h, q);
    if (!rem.is_zero())
      throw EngineError("generator did not reduce to zero against its basis");
    std::vector<Polynomial> comps(ngens);
    comps[i] = Polynomial::constant(1);
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (q[k].is_zero()) continue;
      for (std::size_t t = 0; t < ngens; ++t) comps[t] -= q[k] * expr[k][t];
    }
    ModuleElement s(coords, std::move(comps));
    if (!s.is_zero()) out.generators.push_back(std::move(s));
  }
  return out;
}

Submodule intersect(const Submodule& a, const Submodule& b) {
  if (a.ambient != b.ambient)
    throw InputError("intersection needs a common ambient module");
  Submodule ga = drop_zero_generators(a);
  Submodule gb = drop_zero_generators(b);
  if (ga.generators.empty()) return ga;
  if (gb.generators.empty()) return gb;

  Submodule cat{a.ambient, ga.generators};
  cat.generators.insert(cat.generators.end(), gb.generators.begin(),
                        gb.generators.end());
  Submodule z = syzygies(cat);

  // a syzygy (u | w) with u·gensA + w·gensB = 0 gives u·gensA ∈ a ∩ b
  Submodule out{a.ambient, {}};
  for (const ModuleElement& s : z.generators) {
    ModuleElement v = ModuleElement::zero(a.ambient);
    for (std::size_t i = 0; i < ga.generators.size(); ++i)
      v += ga.generators[i].times(s[static_cast<int>(i)]);
    if (!v.is_zero()) out.generators.push_back(std::move(v));
  }
  return out;
}

Submodule quotient_by(const Submodule& m, const Polynomial& g) {
  if (!g.homogeneous_degree())
    throw InputError("module quotient needs a nonzero homogeneous divisor");
  Submodule mm = drop_zero_generators(m);
  if (mm.generators.empty()) return mm;

  Submodule gf{m.ambient, {}};
  for (int j = 0; j < m.ambient.rank(); ++j)
    gf.generators.push_back(
        ModuleElement::basis_vector(m.ambient, j).times(g));
  Submodule w = intersect(mm, gf);

  Submodule out{m.ambient, {}};
  for (const ModuleElement& v : w.generators) {
    std::vector<Polynomial> comps;
    comps.reserve(v.components().size());
    for (const Polynomial& c : v.components())
      comps.push_back(c.is_zero() ? Polynomial{} : divide_exact(c, g));
    out.generators.push_back(ModuleElement(m.ambient, std::move(comps)));
  }
  return out;
}

Submodule saturate(const Submodule& m) {
  require_homogeneous_nonzero(drop_zero_generators(m), "saturate");
  Submodule cur = drop_zero_generators(m);
  if (cur.generators.empty()) return cur;

  const Polynomial x = Polynomial::variable(0);
  const Polynomial y = Polynomial::variable(1);
  const Polynomial z = Polynomial::variable(2);
  for (int round = 0; round < 64; ++round) {
    Submodule q = intersect(intersect(quotient_by(cur, x), quotient_by(cur, y)),
                            quotient_by(cur, z));
    q.generators = minimal_generators(q);
    if (submodule_equal(q, cur)) return cur;
    cur = std::move(q);
  }
  throw EngineError("saturation did not stabilize");
}

std::vector<ModuleElement> minimal_generators(const Submodule& m) {
  Submodule mm = drop_zero_generators(m);
  require_homogeneous_nonzero(mm, "minimal generators");
  std::stable_sort(mm.generators.begin(), mm.generators.end(),
                   [](const ModuleElement& a, const ModuleElement& b) {
                     return *a.module_degree() < *b.module_degree();
                   });
  MonomialOrder order = MonomialOrder::top();
  Submodule kept{m.ambient, {}};
  for (const ModuleElement& g : mm.generators) {
    if (!kept.generators.empty() && contains(kept, g)) continue;
    auto lt = lead_term(g, order);
    kept.generators.push_back(g.scaled(lt->second.inverse()));
  }
  return kept.generators;
}

GradedResolution minimal_resolution(const Submodule& m, int max_steps) {
  GradedResolution res{m.ambient, {}};
  std::vector<ModuleElement> gens = minimal_generators(m);
  FreeModule target = m.ambient;
  while (!gens.empty()) {
    if (static_cast<int>(res.steps.size()) >= max_steps)
      throw EngineError("resolution exceeded the step bound");
    Submodule step{target, gens};
    FreeModule source{step.generator_degrees()};
    res.steps.push_back({source, target, gens});
    Submodule z = syzygies(step);
    gens = z.generators.empty() ? std::vector<ModuleElement>{}
                                : minimal_generators(z);
    target = source;
  }
  return res;
}

}  // namespace kv
