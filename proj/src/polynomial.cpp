#include "kv/polynomial.hpp"

#include <algorithm>
#include <cstdlib>

#include "kv/error.hpp"

namespace kv {

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return grevlex_cmp(a.mono, b.mono) > 0;
  });
  Polynomial f;
  for (const Term& t : terms) {
    if (t.coeff.is_zero()) continue;
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      f.terms_.back().coeff += t.coeff;
      if (f.terms_.back().coeff.is_zero()) f.terms_.pop_back();
    } else {
      f.terms_.push_back(t);
    }
  }
  return f;
}

Polynomial Polynomial::constant(long long c) {
  return term(Fp::from_int(c), Monomial::one());
}

Polynomial Polynomial::variable(int i) {
  return term(Fp::one(), Monomial::variable(i));
}

Polynomial Polynomial::term(Fp c, const Monomial& m) {
  Polynomial f;
  if (!c.is_zero()) f.terms_.push_back({c, m});
  return f;
}

const Term& Polynomial::lead() const {
  if (terms_.empty()) throw EngineError("lead term of the zero polynomial");
  return terms_.front();
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : terms_.front().mono.degree();
}

bool Polynomial::is_homogeneous() const {
  for (const Term& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.front().mono.degree();
}

// Merge of two descending term lists.
Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out;
  out.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = grevlex_cmp(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      Fp s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) out.terms_.push_back({s, terms_[i].mono});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out;
  for (const Term& t : terms_) out += o.times_term(t.coeff, t.mono);
  return out;
}

Polynomial Polynomial::scaled(Fp c) const {
  if (c.is_zero()) return {};
  Polynomial out = *this;
  for (Term& t : out.terms_) t.coeff *= c;
  return out;
}

Polynomial Polynomial::times_term(Fp c, const Monomial& m) const {
  if (c.is_zero()) return {};
  Polynomial out = *this;
  for (Term& t : out.terms_) {
    t.coeff *= c;
    t.mono = t.mono * m;
  }
  return out;  // multiplying by a fixed monomial preserves grevlex order
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return {};
  return scaled(terms_.front().coeff.inverse());
}

Polynomial derivative(const Polynomial& f, int var) {
  std::size_t v = static_cast<std::size_t>(var);
  std::vector<Term> out;
  for (const Term& t : f.terms()) {
    if (t.mono.e[v] == 0) continue;
    Term d = t;
    d.coeff *= Fp::from_int(t.mono.e[v]);
    d.mono.e[v] -= 1;
    out.push_back(d);
  }
  return Polynomial::from_terms(std::move(out));
}

std::array<Polynomial, 3> jacobian_ideal_generators(const Polynomial& f) {
  auto deg = f.homogeneous_degree();
  if (!deg)
    throw InputError("jacobian generators need a nonzero homogeneous form");
  if (static_cast<std::uint32_t>(*deg) % field_characteristic() == 0)
    throw InputError(
        "form degree divisible by the field characteristic; the Euler "
        "relation degenerates");
  return {derivative(f, 0), derivative(f, 1), derivative(f, 2)};
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw InputError("division by the zero polynomial");
  Polynomial rem = f, quot;
  while (!rem.is_zero()) {
    const Term& lt = rem.lead();
    const Term& lg = g.lead();
    if (!lg.mono.divides(lt.mono))
      throw InputError("inexact polynomial division");
    Fp c = lt.coeff / lg.coeff;
    Monomial m = lg.mono.quotient_of(lt.mono);
    quot += Polynomial::term(c, m);
    rem -= g.times_term(c, m);
  }
  return quot;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : f.terms()) {
    long long c = t.coeff.balanced();
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    long long a = std::llabs(c);
    bool unit_mono = t.mono == Monomial::one();
    if (a != 1 || unit_mono) {
      out += std::to_string(a);
      if (!unit_mono) out += "*";
    }
    if (!unit_mono) out += to_string(t.mono);
    first = false;
  }
  return out;
}

}  // namespace kv
