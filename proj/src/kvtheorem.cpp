#include "kv/kvtheorem.hpp"

#include <algorithm>

#include "kv/error.hpp"
#include "kv/parse.hpp"

namespace kv {

namespace {

void require_forms(const std::vector<Polynomial>& f, const char* who) {
  if (f.empty()) throw InputError(std::string(who) + ": no generators");
  for (const Polynomial& fi : f)
    if (!fi.homogeneous_degree())
      throw InputError(std::string(who) +
                       ": generators must be nonzero homogeneous forms");
}

// submodule ⊕_j g·e_j for g over the generators of a rank-1 ideal:
// elements of the target whose every component lies in the ideal
Submodule componentwise_ideal(const FreeModule& target,
                              const Submodule& ideal) {
  Submodule out{target, {}};
  for (int j = 0; j < target.rank(); ++j)
    for (const ModuleElement& g : ideal.generators)
      out.generators.push_back(
          ModuleElement::basis_vector(target, j).times(g[0]));
  return out;
}

}  // namespace

std::vector<Polynomial> pairwise_products(const std::vector<Polynomial>& f) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i; j < f.size(); ++j) out.push_back(f[i] * f[j]);
  return out;
}

IdealAnalysis analyze_codim2(const std::vector<Polynomial>& f,
                             int degree_cap) {
  require_forms(f, "codimension analysis");
  IdealAnalysis a;
  a.ideal = Submodule::ideal(f);
  a.degrees = a.ideal.generator_degrees();
  Submodule sat = saturate(a.ideal);
  sat.generators = minimal_generators(sat);
  a.saturation = std::move(sat);
  HilbertData h = hilbert_polynomial(
      GradedModule::of_quotient(a.saturation), degree_cap);
  if (!h.is_constant())
    throw InputError(
        "not codimension 2: the basepoint locus has a curve component");
  long long deg = h.coeff[0].den == 1 ? h.coeff[0].num : -1;
  if (deg < 0) throw EngineError("non-integer constant Hilbert polynomial");
  if (deg == 0)
    throw InputError(
        "not codimension 2: the generators have no common zero");
  a.deg_z = deg;
  return a;
}

Submodule syzygy_module(const std::vector<Polynomial>& f) {
  IdealAnalysis a = analyze_codim2(f);
  return syzygies(a.ideal);
}

namespace {

Submodule vanishing_from(const IdealAnalysis& a, const Submodule& s) {
  return intersect(s, componentwise_ideal(s.ambient, a.saturation));
}

}  // namespace

Submodule vanishing_syzygies(const std::vector<Polynomial>& f) {
  IdealAnalysis a = analyze_codim2(f);
  return vanishing_from(a, syzygies(a.ideal));
}

KVReport kv_verdict(const std::vector<Polynomial>& f, int degree_cap) {
  if (f.size() != 3 && f.size() != 4)
    throw InputError("the verdict needs 3 generators (4 for the extension)");
  IdealAnalysis a = analyze_codim2(f, degree_cap);

  KVReport r;
  r.field_char = field_characteristic();
  for (const Polynomial& fi : f) r.input.push_back(to_string(fi));
  r.degrees = a.degrees;
  r.deg_Z = a.deg_z;

  r.syz = syzygies(a.ideal);
  r.koszul = koszul_submodule(f);
  r.vanishing = vanishing_from(a, r.syz);
  r.k_eq_v = submodule_equal(r.koszul, r.vanishing);

  r.h_koszul =
      hilbert_polynomial(GradedModule::of_submodule(r.koszul), degree_cap);
  r.h_vanishing =
      hilbert_polynomial(GradedModule::of_submodule(r.vanishing), degree_cap);

  HilbertData h_r_mod_i =
      hilbert_polynomial(GradedModule::of_quotient(a.ideal), degree_cap);
  HilbertData h_r_mod_i2 = hilbert_polynomial(
      GradedModule::of_quotient(Submodule::ideal(pairwise_products(f))),
      degree_cap);
  r.h_i_mod_i2 = hilbert_difference(h_r_mod_i2, h_r_mod_i);
  if (!r.h_i_mod_i2.is_constant() || r.h_i_mod_i2.coeff[0].den != 1)
    throw EngineError(
        "H(I/I²) is not a constant integer for a codimension-2 ideal");
  r.herzog_slack = r.h_i_mod_i2.coeff[0].num - 2 * r.deg_Z;

  if (f.size() == 3) {
    // Independent cross-check of H(V) as a polynomial:
    //   H(V) = Σ_j H(R(−d_j)) − H(R) + H(I/I²) − 2·deg Z.
    HilbertData hull = hilbert_of_free(FreeModule{a.degrees});
    HilbertData ring = hilbert_of_free(FreeModule::ring());
    for (int i = 0; i < 3; ++i) {
      HalfInt want = hull.coeff[static_cast<std::size_t>(i)] -
                     ring.coeff[static_cast<std::size_t>(i)] +
                     r.h_i_mod_i2.coeff[static_cast<std::size_t>(i)];
      if (i == 0) want = want - HalfInt::of(2 * r.deg_Z);
      if (!(r.h_vanishing.coeff[static_cast<std::size_t>(i)] == want))
        throw EngineError(
            "H(V) violates the vanishing-syzygy Hilbert identity");
    }
  }

  r.lci = r.herzog_slack == 0;
  r.consistent = r.k_eq_v == r.lci;
  if (f.size() == 3 && !r.consistent)
    throw EngineError(
        "equivalence violated for a 3-generated codimension-2 ideal: "
        "K = V is " +
        std::string(r.k_eq_v ? "true" : "false") + " but the slack is " +
        std::to_string(r.herzog_slack));

  if (!r.k_eq_v) {
    GroebnerBasis gk = buchberger(r.koszul);
    Submodule vmin{r.vanishing.ambient, minimal_generators(r.vanishing)};
    for (const ModuleElement& g : vmin.generators)
      if (!normal_form(g, gk).is_zero()) {
        r.witness = g;
        break;
      }
    if (!r.witness)
      throw EngineError("K ≠ V but every V generator lies in K");
  }
  return r;
}

bool check_saturated_KV(const std::vector<Polynomial>& f) {
  IdealAnalysis a = analyze_codim2(f);
  Submodule s = syzygies(a.ideal);
  Submodule k = koszul_submodule(f);
  Submodule v = vanishing_from(a, s);
  return submodule_equal(saturate(k), k) && submodule_equal(saturate(v), v);
}

bool check_I2_IIsat(const std::vector<Polynomial>& f) {
  require_forms(f, "square-saturation identity");
  Submodule sat = saturate(Submodule::ideal(f));
  sat.generators = minimal_generators(sat);

  std::vector<Polynomial> i2 = pairwise_products(f);
  std::vector<Polynomial> i_isat;
  for (const Polynomial& fi : f)
    for (const ModuleElement& g : sat.generators) i_isat.push_back(fi * g[0]);

  return submodule_equal(saturate(Submodule::ideal(i2)),
                         saturate(Submodule::ideal(i_isat)));
}

bool koszul_chain_checks(const std::vector<Polynomial>& f) {
  if (f.size() != 3)
    throw InputError("the chain checks are for exactly 3 generators");
  IdealAnalysis a = analyze_codim2(f);

  Submodule k = koszul_submodule(f);
  // d₁∘d₂ = 0: every Koszul generator is a syzygy of (f₁,f₂,f₃)
  for (const ModuleElement& g : k.generators) {
    Polynomial pairing;
    for (std::size_t i = 0; i < f.size(); ++i)
      pairing += g[static_cast<int>(i)] * f[i];
    if (!pairing.is_zero()) return false;
  }
  // K ⊆ S, and strictly: a nonempty basepoint locus breaks exactness in
  // the middle, so the Koszul syzygies never exhaust S
  Submodule s = syzygies(a.ideal);
  GroebnerBasis gs = buchberger(s);
  for (const ModuleElement& g : k.generators)
    if (!normal_form(g, gs).is_zero()) return false;
  if (submodule_equal(k, s)) return false;

  // Hilbert identity from 0 → R(−Σd) → ⊕_{j<k} R(−d_j−d_k) → K → 0:
  // H(K) = Σ_{j<k} H(R(−d_j−d_k)) − H(R(−Σd)) as polynomials
  std::vector<int> pair_twists;
  int total = 0;
  for (int d : a.degrees) total += d;
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t l = j + 1; l < 3; ++l)
      pair_twists.push_back(a.degrees[j] + a.degrees[l]);
  HilbertData hk = hilbert_polynomial(GradedModule::of_submodule(k));
  HilbertData hull = hilbert_of_free(FreeModule{pair_twists});
  HilbertData relfree = hilbert_of_free(FreeModule{{total}});
  for (std::size_t i = 0; i < 3; ++i)
    if (!(hk.coeff[i] == hull.coeff[i] - relfree.coeff[i])) return false;

  // exactness one step further back: the only relation among the three
  // Koszul generators (ordered (1,2),(1,3),(2,3)) is (f₃, −f₂, f₁)
  Submodule rel = syzygies(k);
  ModuleElement expected(rel.ambient, {f[2], -f[1], f[0]});
  Submodule expected_sub{rel.ambient, {expected}};
  return submodule_equal(rel, expected_sub);
}

namespace {

// ideal of a single projective point given by homogeneous coordinates
std::vector<Polynomial> point_ideal(const std::array<Fp, 3>& p) {
  const Polynomial x = Polynomial::variable(0);
  const Polynomial y = Polynomial::variable(1);
  const Polynomial z = Polynomial::variable(2);
  if (!p[2].is_zero())
    return {x.scaled(p[2]) - z.scaled(p[0]), y.scaled(p[2]) - z.scaled(p[1])};
  if (!p[1].is_zero()) return {x.scaled(p[1]) - y.scaled(p[0]), z};
  return {y, z};
}

}  // namespace

std::vector<Polynomial> random_codim2_ideal(Rng& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    int reduced = rng.uniform_int(0, 3);
    bool fat = rng.uniform_int(0, 2) == 0 || reduced == 0;

    // sample pairwise distinct points
    std::vector<std::array<Fp, 3>> pts;
    int wanted = reduced + (fat ? 1 : 0);
    while (static_cast<int>(pts.size()) < wanted) {
      std::array<Fp, 3> p{rng.field_element(), rng.field_element(),
                          Fp::one()};
      bool dup = false;
      for (const auto& q : pts) dup = dup || q == p;
      if (!dup) pts.push_back(p);
    }

    // scheme ideal: intersection of the point ideals, the last one
    // squared when a double point is requested
    Submodule locus;
    bool first = true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::vector<Polynomial> gens = point_ideal(pts[i]);
      if (fat && i + 1 == pts.size()) gens = pairwise_products(gens);
      Submodule piece = Submodule::ideal(gens);
      locus = first ? piece : intersect(locus, piece);
      first = false;
    }
    locus.generators = minimal_generators(locus);

    HilbertEvaluator ev(locus);
    std::vector<Polynomial> f;
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      int d = rng.uniform_int(2, 4);
      while (d <= 5 && ev.submodule_dim(d) < 2) ++d;
      if (d > 5) {
        ok = false;
        break;
      }
      std::vector<Polynomial> basis = homogeneous_ideal_basis(locus, d);
      Polynomial fi;
      for (int tries = 0; fi.is_zero() && tries < 8; ++tries) {
        fi = {};
        for (const Polynomial& b : basis)
          fi += b.scaled(rng.field_element());
      }
      if (fi.is_zero()) ok = false;
      f.push_back(fi);
    }
    if (!ok) continue;

    try {
      analyze_codim2(f);
      return f;
    } catch (const InputError&) {
      continue;  // degenerate draw (common factor, etc.): resample
    }
  }
  throw EngineError("random ideal sampling failed to produce codimension 2");
}

}  // namespace kv
