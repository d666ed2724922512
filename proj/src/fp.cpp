#include "kv/fp.hpp"

#include <ostream>

#include "kv/error.hpp"

namespace kv {

namespace {

std::uint32_t g_modulus = 32003;

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

void set_field_characteristic(std::uint32_t p) {
  if (!is_prime(p))
    throw InputError("field characteristic must be prime, got " +
                     std::to_string(p));
  g_modulus = p;
}

std::uint32_t field_characteristic() { return g_modulus; }

ScopedField::ScopedField(std::uint32_t p) : saved_(g_modulus) {
  set_field_characteristic(p);
}

ScopedField::~ScopedField() { g_modulus = saved_; }

Fp Fp::from_int(long long v) {
  long long m = g_modulus;
  long long r = v % m;
  if (r < 0) r += m;
  Fp a;
  a.v_ = static_cast<std::uint32_t>(r);
  return a;
}

long long Fp::balanced() const {
  long long p = g_modulus;
  long long v = v_;
  return 2 * v > p ? v - p : v;
}

Fp Fp::operator+(Fp o) const {
  std::uint32_t s = v_ + o.v_;
  if (s >= g_modulus) s -= g_modulus;
  Fp a;
  a.v_ = s;
  return a;
}

Fp Fp::operator-(Fp o) const {
  std::uint32_t s = v_ >= o.v_ ? v_ - o.v_ : v_ + g_modulus - o.v_;
  Fp a;
  a.v_ = s;
  return a;
}

Fp Fp::operator*(Fp o) const {
  std::uint64_t prod = std::uint64_t(v_) * o.v_ % g_modulus;
  Fp a;
  a.v_ = static_cast<std::uint32_t>(prod);
  return a;
}

Fp Fp::operator-() const { return Fp{} - *this; }

Fp Fp::inverse() const {
  if (v_ == 0) throw InputError("zero has no inverse in GF(p)");
  // Extended Euclid on (p, v): returns t with v*t == 1 (mod p).
  long long r0 = g_modulus, r1 = v_;
  long long t0 = 0, t1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    long long t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  return from_int(t0);
}

std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.balanced(); }

}  // namespace kv
