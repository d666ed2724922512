#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kv/fp.hpp"
#include "kv/monomial.hpp"

namespace kv {

struct Term {
  Fp coeff;
  Monomial mono;
  bool operator==(const Term&) const = default;
};

// Element of GF(p)[x,y,z], stored as terms with nonzero coefficients in
// strictly descending grevlex order.  The empty term list is the zero
// polynomial.  All constructors and operators maintain that normal form,
// so operator== is structural equality.
class Polynomial {
 public:
  Polynomial() = default;  // zero

  static Polynomial from_terms(std::vector<Term> terms);  // sorts & combines
  static Polynomial constant(long long c);
  static Polynomial variable(int i);
  static Polynomial term(Fp c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& lead() const;  // throws EngineError on zero
  int degree() const;        // of the lead term; -1 for zero

  bool is_homogeneous() const;  // zero counts as homogeneous
  // degree if homogeneous and nonzero, nullopt otherwise
  std::optional<int> homogeneous_degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(Fp c) const;                      // c * f
  Polynomial times_term(Fp c, const Monomial& m) const;  // (c*m) * f
  Polynomial monic() const;                           // lead coefficient 1

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<Term> terms_;
};

Polynomial derivative(const Polynomial& f, int var);

// Partial derivatives (f_x, f_y, f_z) of a nonzero homogeneous form whose
// degree is not divisible by the field characteristic (so that the Euler
// relation recovers f from its partials).
std::array<Polynomial, 3> jacobian_ideal_generators(const Polynomial& f);

// f / g when g divides f exactly; throws InputError otherwise.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

std::string to_string(const Polynomial& f);

}  // namespace kv
