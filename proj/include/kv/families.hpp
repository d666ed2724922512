#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "kv/kvtheorem.hpp"

namespace kv {

// The line arrangement Q = x · Π(y − a_i·x) · Π(z − b_j·x): a product of
// 1 + m + n distinct lines through three pencils.  The a_i must be
// nonzero and pairwise distinct, likewise the b_j.
struct ArrangementSpec {
  int m = 0, n = 0;
  std::vector<Fp> a, b;

  static ArrangementSpec random(int m, int n, Rng& rng);
};

Polynomial build_arrangement(const ArrangementSpec& spec);

// Jacobian-ideal analysis of the arrangement, with everything the closed
// formulas predict: deg Z = m²+n²+mn, H(J/J²) = 2(m²+n²+mn), a one-step
// resolution R(−m−2n) ⊕ R(−2m−n) → R³(−m−n), K = V, and lci.
struct ArrangementReport {
  int m = 0, n = 0;
  KVReport kv;
  std::vector<int> target_shifts;  // e.g. (−3,−3,−3); sorted ascending
  std::vector<int> source_shifts;  // e.g. (−5,−4)
  long long expected_deg_z = 0;
  bool deg_z_ok = false;
  bool h_i_mod_i2_ok = false;
  bool shifts_ok = false;
  bool all_ok = false;  // the above plus k_eq_v, lci, consistent
};

ArrangementReport arrangement_report(const ArrangementSpec& spec);

// Five random points in the plane; J = their ideal, generated by the
// unique conic through them and two cubics.  Four random cubics from J₃
// cut out the same scheme, giving a 4-generated lci ideal where some
// vanishing syzygy is not Koszul.  Genericity is verified (distinctness,
// no four points collinear, dim J₂ = 1, dim J₃ = 5) with re-draws from
// derived seeds, up to a retry cap.
struct FivePointsReport {
  std::uint64_t seed = 0;      // seed that produced the accepted draw
  int redraws = 0;
  std::vector<std::array<long long, 3>> points;  // balanced coordinates
  long long dim_j2 = 0, dim_j3 = 0;
  std::vector<int> j_generator_degrees;  // expect (2,3,3)
  bool ideal_matches_locus = false;      // saturate(⟨f⟩) = J
  KVReport kv;                           // r = 4 verdict
  bool witness_vanishes = false;  // witness components ∈ J, pairing = 0
  bool pass = false;
};

FivePointsReport five_points_counterexample(std::uint64_t seed);

// Euler-characteristic comparison of the symmetric square with I².
// From the one-step resolution ⊕R(−b_i) → ⊕R(−a_j) → I of a saturated
// codimension-2 ideal, exactness of
//   0 → ∧²F → F⊗G → Sym₂G → Sym₂I-part → 0
// gives H(Sym₂ I)(n) = Σ_{j≤k} h(a_j+a_k) − Σ_{i,j} h(b_i+a_j) +
// Σ_{i<i'} h(b_i+b_i') with h(t) = dim R(−t)_n.  The discrepancy
// χ(n) − dim(I²)_n is the dimension of the degree-n kernel of
// Sym₂I → I²; it is everywhere ≥ 0 and identically zero exactly in the
// lci case.
struct Sym2Report {
  std::vector<int> a_shifts;  // generator twists a_j
  std::vector<int> b_shifts;  // syzygy twists b_i
  std::map<int, long long> discrepancy;  // degree → χ(n) − dim(I²)_n
  long long total_discrepancy = 0;
  bool verdict_iso = false;
};

Sym2Report sym2_euler_check(const Submodule& ideal);

}  // namespace kv
