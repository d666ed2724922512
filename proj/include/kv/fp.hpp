#pragma once

#include <cstdint>
#include <iosfwd>

namespace kv {

// The prime field GF(p).  The modulus is a per-process session setting
// (default 32003) shared by every Fp value; mixing values from different
// moduli is meaningless, so the modulus is fixed before any arithmetic
// and changed only between independent computations.
void set_field_characteristic(std::uint32_t p);  // throws unless p is prime
std::uint32_t field_characteristic();

// RAII helper for tests that need a temporary modulus.
class ScopedField {
 public:
  explicit ScopedField(std::uint32_t p);
  ~ScopedField();
  ScopedField(const ScopedField&) = delete;
  ScopedField& operator=(const ScopedField&) = delete;

 private:
  std::uint32_t saved_;
};

class Fp {
 public:
  constexpr Fp() = default;          // zero
  static Fp from_int(long long v);   // reduces v mod p

  std::uint32_t value() const { return v_; }  // canonical: 0 <= v < p
  long long balanced() const;                 // representative in (-p/2, p/2]
  bool is_zero() const { return v_ == 0; }

  static Fp zero() { return Fp{}; }
  static Fp one() { return from_int(1); }

  Fp operator+(Fp o) const;
  Fp operator-(Fp o) const;
  Fp operator*(Fp o) const;
  Fp operator-() const;
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  Fp inverse() const;  // throws InputError on zero
  Fp operator/(Fp o) const { return *this * o.inverse(); }

  bool operator==(Fp o) const { return v_ == o.v_; }
  bool operator!=(Fp o) const { return v_ != o.v_; }

 private:
  std::uint32_t v_ = 0;
};

std::ostream& operator<<(std::ostream& os, Fp a);  // balanced representative

}  // namespace kv
