#pragma once

#include <vector>

#include "kv/groebner.hpp"
#include "kv/module.hpp"

namespace kv {

// Submodule of ⊕_i R(-deg f_i) generated by the Koszul syzygies
// f_k·e_j − f_j·e_k for j < k, in lexicographic (j,k) order.  Every
// generator is homogeneous of module degree deg f_j + deg f_k.
Submodule koszul_submodule(const std::vector<Polynomial>& f);

// First syzygy module of the generator list of m: the kernel of
// ⊕_i R(-δ_i) → m, e_i ↦ generator_i, where δ_i are the generator
// module degrees.  Generators must be nonzero and homogeneous.
// Computed Schreyer-style from a tracked Gröbner basis.
Submodule syzygies(const Submodule& m);

Submodule intersect(const Submodule& a, const Submodule& b);

// (m : g) = {v in the ambient : g·v ∈ m}; g nonzero homogeneous
Submodule quotient_by(const Submodule& m, const Polynomial& g);

// Saturation with respect to ⟨x,y,z⟩: iterate m ← (m:x)∩(m:y)∩(m:z)
// until it stabilizes.  A submodule is saturated iff it equals its own
// saturation.
Submodule saturate(const Submodule& m);

// Inclusion-minimal generator subset: greedily keeps, in ascending
// module-degree order, the generators not already generated by the kept
// ones.  For homogeneous input this realizes a minimal generating set.
std::vector<ModuleElement> minimal_generators(const Submodule& m);

struct ResolutionStep {
  FreeModule source;
  FreeModule target;
  // matrix columns: images of the source basis vectors in the target
  std::vector<ModuleElement> columns;
};

// Minimal graded free resolution of a submodule m ⊆ F:
//   steps[0]: G₀ → F picks minimal generators of m,
//   steps[k]: G_k → G_{k−1} picks minimal generators of the syzygies of
//   the previous step's columns.
struct GradedResolution {
  FreeModule ambient;
  std::vector<ResolutionStep> steps;
  // number of syzygy steps past the generator step
  int length() const { return static_cast<int>(steps.size()) - 1; }
};

GradedResolution minimal_resolution(const Submodule& m, int max_steps = 8);

}  // namespace kv
