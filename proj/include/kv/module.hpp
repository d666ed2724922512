#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kv/polynomial.hpp"

namespace kv {

// Graded free module ⊕_j R(-twists[j]); component j carries twist
// twists[j], so a polynomial of degree d sitting in component j is
// homogeneous of module degree d + twists[j].
struct FreeModule {
  std::vector<int> twists;

  int rank() const { return static_cast<int>(twists.size()); }
  static FreeModule ring() { return {{0}}; }  // R itself

  bool operator==(const FreeModule&) const = default;
};

class ModuleElement {
 public:
  ModuleElement(FreeModule ambient, std::vector<Polynomial> components);
  static ModuleElement zero(FreeModule ambient);
  static ModuleElement basis_vector(FreeModule ambient, int j);  // e_j

  const FreeModule& ambient() const { return ambient_; }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& operator[](int j) const {
    return components_[static_cast<std::size_t>(j)];
  }

  bool is_zero() const;
  bool is_homogeneous() const;  // with respect to the twists
  // module degree if homogeneous and nonzero, nullopt otherwise
  std::optional<int> module_degree() const;

  ModuleElement operator+(const ModuleElement& o) const;
  ModuleElement operator-(const ModuleElement& o) const;
  ModuleElement operator-() const;
  ModuleElement scaled(Fp c) const;
  ModuleElement times_term(Fp c, const Monomial& m) const;
  ModuleElement times(const Polynomial& f) const;
  ModuleElement& operator+=(const ModuleElement& o) {
    return *this = *this + o;
  }
  ModuleElement& operator-=(const ModuleElement& o) {
    return *this = *this - o;
  }

  bool operator==(const ModuleElement&) const = default;

 private:
  FreeModule ambient_;
  std::vector<Polynomial> components_;
};

// Finitely generated graded submodule of a free module, presented by an
// ordered generator list (order matters: syzygies are reported in the
// coordinates of this list).
struct Submodule {
  FreeModule ambient;
  std::vector<ModuleElement> generators;

  // ideal ⟨f₁,…,f_r⟩ viewed as a submodule of R
  static Submodule ideal(const std::vector<Polynomial>& gens);

  bool is_zero() const;
  // module degrees of the generators; requires all homogeneous nonzero
  std::vector<int> generator_degrees() const;
};

std::string to_string(const ModuleElement& v);  // e.g. "(z, -y, 0)"

}  // namespace kv
