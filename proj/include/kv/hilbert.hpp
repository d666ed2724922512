#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "kv/groebner.hpp"
#include "kv/module.hpp"

namespace kv {

// Exact rational with denominator 1 or 2 — the coefficient domain of
// Hilbert polynomials in three variables (degree ≤ 2, so denominators
// divide 2! = 2).
struct HalfInt {
  long long num = 0;
  int den = 1;

  static HalfInt of(long long n) { return {n, 1}; }
  static HalfInt halves(long long twice) {  // value twice/2, normalized
    return twice % 2 == 0 ? HalfInt{twice / 2, 1} : HalfInt{twice, 2};
  }
  long long twice() const { return den == 2 ? num : 2 * num; }

  HalfInt operator+(HalfInt o) const { return halves(twice() + o.twice()); }
  HalfInt operator-(HalfInt o) const { return halves(twice() - o.twice()); }
  bool is_zero() const { return num == 0; }
  bool operator==(const HalfInt&) const = default;
};

std::string to_string(HalfInt h);  // "c" or "c/2"

// Hilbert function samples plus the Hilbert polynomial
// c0 + c1·n + c2·n² they stabilize to.
struct HilbertData {
  std::map<int, long long> values;  // sampled dimensions by degree
  int stable_from = 0;              // values agree with the polynomial ≥ here
  std::array<HalfInt, 3> coeff{};   // c0, c1, c2

  long long eval(int n) const;  // polynomial value; exact
  // sampled value if available, polynomial value beyond the samples
  long long value_at(int n) const;
  bool is_constant() const { return coeff[1].is_zero() && coeff[2].is_zero(); }
  bool same_polynomial(const HilbertData& o) const { return coeff == o.coeff; }
  bool operator==(const HilbertData&) const = default;
};

// a − b, degreewise and as polynomials
HilbertData hilbert_difference(const HilbertData& a, const HilbertData& b);

// A graded module that is either a submodule M ⊆ F or the quotient F/M.
struct GradedModule {
  Submodule sub;
  bool quotient = false;

  static GradedModule of_submodule(Submodule m) {
    return {std::move(m), false};
  }
  static GradedModule of_quotient(Submodule m) { return {std::move(m), true}; }
};

// Dimension counting from the lead-term module of a Gröbner basis:
// dim M_n equals the number of monomial multiples of the lead terms in
// degree n, counted per position by inclusion–exclusion over the minimal
// lead monomials (or by direct enumeration when there are many).
class HilbertEvaluator {
 public:
  explicit HilbertEvaluator(const Submodule& m);
  explicit HilbertEvaluator(const GroebnerBasis& gb);

  long long submodule_dim(int n) const;
  long long quotient_dim(int n) const;
  // degree from which on all counting terms are polynomial in n
  int stabilization_hint() const;
  const FreeModule& ambient() const { return ambient_; }

 private:
  struct Position {
    std::vector<Monomial> min_leads;
    // inclusion–exclusion: signed count per lcm degree
    std::vector<std::pair<int, long long>> signed_degrees;
    bool direct = false;  // too many generators: enumerate instead
    int max_term_degree = 0;
  };
  void build(const GroebnerBasis& gb);
  long long position_dim(const Position& p, int internal_degree) const;

  FreeModule ambient_;
  std::vector<Position> positions_;
};

long long hilbert_function(const GradedModule& m, int n);

// Samples the Hilbert function up to a certified stabilization bound,
// fits the degree-≤2 polynomial on the last three samples and checks it
// on the four before them; degree_cap limits how far sampling may go.
HilbertData hilbert_polynomial(const GradedModule& m, int degree_cap = 64);

// Closed form for a free module ⊕ R(-a_j).
HilbertData hilbert_of_free(const FreeModule& f);

// Constant value of H(R/I^sat): the length of the basepoint scheme cut
// out by the rank-1 submodule (ideal) I.  Requires that this Hilbert
// polynomial be a nonzero constant.
long long degree_of_Z(const Submodule& ideal, int degree_cap = 64);

// Independent cross-check: dimension of the degree-n piece computed by
// Gaussian elimination on the monomial-multiple matrix of the
// generators.  No Gröbner machinery is involved.
long long oracle_hilbert(const GradedModule& m, int n);

// Canonical k-basis (reduced row echelon form) of the degree-n piece of
// a rank-1 submodule, by the same elimination route as oracle_hilbert.
std::vector<Polynomial> homogeneous_ideal_basis(const Submodule& ideal, int n);

}  // namespace kv
