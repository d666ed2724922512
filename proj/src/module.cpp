#include "kv/module.hpp"

#include "kv/error.hpp"

namespace kv {

ModuleElement::ModuleElement(FreeModule ambient,
                             std::vector<Polynomial> components)
    : ambient_(std::move(ambient)), components_(std::move(components)) {
  if (static_cast<int>(components_.size()) != ambient_.rank())
    throw InputError("component count does not match the ambient rank");
}

ModuleElement ModuleElement::zero(FreeModule ambient) {
  std::size_t rank = ambient.twists.size();
  return ModuleElement(std::move(ambient), std::vector<Polynomial>(rank));
}

ModuleElement ModuleElement::basis_vector(FreeModule ambient, int j) {
  ModuleElement v = zero(std::move(ambient));
  v.components_[static_cast<std::size_t>(j)] = Polynomial::constant(1);
  return v;
}

bool ModuleElement::is_zero() const {
  for (const Polynomial& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

bool ModuleElement::is_homogeneous() const {
  std::optional<int> deg;
  for (std::size_t j = 0; j < components_.size(); ++j) {
    const Polynomial& c = components_[j];
    if (c.is_zero()) continue;
    auto d = c.homogeneous_degree();
    if (!d) return false;
    int md = *d + ambient_.twists[j];
    if (deg && *deg != md) return false;
    deg = md;
  }
  return true;
}

std::optional<int> ModuleElement::module_degree() const {
  if (is_zero() || !is_homogeneous()) return std::nullopt;
  for (std::size_t j = 0; j < components_.size(); ++j)
    if (!components_[j].is_zero())
      return components_[j].degree() + ambient_.twists[j];
  return std::nullopt;
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
  if (ambient_ != o.ambient_)
    throw InputError("ambient module mismatch in module arithmetic");
  ModuleElement out = *this;
  for (std::size_t j = 0; j < components_.size(); ++j)
    out.components_[j] += o.components_[j];
  return out;
}

ModuleElement ModuleElement::operator-() const {
  ModuleElement out = *this;
  for (Polynomial& c : out.components_) c = -c;
  return out;
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const {
  return *this + (-o);
}

ModuleElement ModuleElement::scaled(Fp c) const {
  ModuleElement out = *this;
  for (Polynomial& f : out.components_) f = f.scaled(c);
  return out;
}

ModuleElement ModuleElement::times_term(Fp c, const Monomial& m) const {
  ModuleElement out = *this;
  for (Polynomial& f : out.components_) f = f.times_term(c, m);
  return out;
}

ModuleElement ModuleElement::times(const Polynomial& f) const {
  ModuleElement out = *this;
  for (Polynomial& g : out.components_) g = g * f;
  return out;
}

Submodule Submodule::ideal(const std::vector<Polynomial>& gens) {
  Submodule m;
  m.ambient = FreeModule::ring();
  for (const Polynomial& f : gens)
    m.generators.push_back(ModuleElement(m.ambient, {f}));
  return m;
}

bool Submodule::is_zero() const {
  for (const ModuleElement& g : generators)
    if (!g.is_zero()) return false;
  return true;
}

std::vector<int> Submodule::generator_degrees() const {
  std::vector<int> out;
  for (const ModuleElement& g : generators) {
    auto d = g.module_degree();
    if (!d)
      throw InputError(
          "generator degrees need nonzero homogeneous generators");
    out.push_back(*d);
  }
  return out;
}

std::string to_string(const ModuleElement& v) {
  std::string out = "(";
  for (std::size_t j = 0; j < v.components().size(); ++j) {
    if (j) out += ", ";
    out += to_string(v.components()[j]);
  }
  return out + ")";
}

}  // namespace kv
