#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kv/hilbert.hpp"
#include "kv/modalg.hpp"
#include "kv/rng.hpp"

namespace kv {

// Everything the K-versus-V comparison produces for an ideal
// I = ⟨f₁,…,f_r⟩ of codimension 2:
//   K — the Koszul syzygies, V — the syzygies all of whose components
//   lie in the saturation I^sat (they vanish on the basepoint scheme Z).
// The main equivalence states, for r = 3: K = V iff I is a local
// complete intersection, detected numerically by
// herzog_slack = H(I/I²) − 2·deg Z being zero.
struct KVReport {
  std::uint32_t field_char = 0;
  std::vector<std::string> input;  // printed generators
  std::vector<int> degrees;
  long long deg_Z = 0;

  Submodule syz;      // S: all syzygies of the generator list
  Submodule koszul;   // K ⊆ S
  Submodule vanishing;  // V = S ∩ ⊕ I^sat(−d_j)

  HilbertData h_koszul, h_vanishing, h_i_mod_i2;
  long long herzog_slack = 0;

  bool k_eq_v = false;
  bool lci = false;         // herzog_slack == 0
  bool consistent = false;  // k_eq_v == lci; must hold when r = 3
  std::optional<ModuleElement> witness;  // element of V outside K if K ≠ V
};

// Shared precondition work: the ideal, its saturation (minimal
// generators), the generator degrees, and deg Z.  Throws InputError
// unless the basepoint locus is nonempty and zero-dimensional.
struct IdealAnalysis {
  Submodule ideal;
  Submodule saturation;
  std::vector<int> degrees;
  long long deg_z = 0;
};
IdealAnalysis analyze_codim2(const std::vector<Polynomial>& f,
                             int degree_cap = 64);

// S: the full syzygy module of (f₁,…,f_r); codimension-2 precondition.
Submodule syzygy_module(const std::vector<Polynomial>& f);

// V: syzygies with all components in I^sat.
Submodule vanishing_syzygies(const std::vector<Polynomial>& f);

// The complete comparison; r must be 3 (where the equivalence K = V ⟺
// lci is a theorem) or 4 (where it is allowed to fail).  For r = 3 a
// verdict with k_eq_v ≠ lci raises EngineError.
KVReport kv_verdict(const std::vector<Polynomial>& f, int degree_cap = 64);

// K and V are saturated submodules of ⊕R(−d_j).
bool check_saturated_KV(const std::vector<Polynomial>& f);

// saturate(I²) = saturate(I·I^sat); I any nonzero homogeneous ideal.
bool check_I2_IIsat(const std::vector<Polynomial>& f);

// The Koszul complex on three codimension-2 generators is a complex and
// is exact away from its middle spot: d₁∘d₂ = 0, K ⊆ S, and the
// syzygies among the three Koszul generators are generated by
// (f₃, −f₂, f₁).
bool koszul_chain_checks(const std::vector<Polynomial>& f);

// Seeded generator of random 3-generated codimension-2 ideals with
// generator degrees in {2,3,4}: draws a small basepoint scheme (reduced
// points, optionally one double point so both lci and non-lci cases
// occur), then random forms through it, and verifies codimension 2.
std::vector<Polynomial> random_codim2_ideal(Rng& rng);

// pairwise products f_i·f_j, i ≤ j (generators of I²)
std::vector<Polynomial> pairwise_products(const std::vector<Polynomial>& f);

}  // namespace kv
