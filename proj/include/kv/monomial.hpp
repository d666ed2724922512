#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

namespace kv {

// Monomial in the three variables x, y, z (indices 0, 1, 2).
struct Monomial {
  std::array<int, 3> e{0, 0, 0};

  static Monomial one() { return {}; }
  static Monomial variable(int i) {
    Monomial m;
    m.e[static_cast<std::size_t>(i)] = 1;
    return m;
  }

  int degree() const { return e[0] + e[1] + e[2]; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]}};
  }

  bool divides(const Monomial& m) const {
    return e[0] <= m.e[0] && e[1] <= m.e[1] && e[2] <= m.e[2];
  }

  // quotient m / *this; caller guarantees divisibility
  Monomial quotient_of(const Monomial& m) const {
    return {{m.e[0] - e[0], m.e[1] - e[1], m.e[2] - e[2]}};
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    return {{std::max(a.e[0], b.e[0]), std::max(a.e[1], b.e[1]),
             std::max(a.e[2], b.e[2])}};
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    return (a.e[0] == 0 || b.e[0] == 0) && (a.e[1] == 0 || b.e[1] == 0) &&
           (a.e[2] == 0 || b.e[2] == 0);
  }

  bool operator==(const Monomial&) const = default;
};

// Graded reverse lexicographic order with x > y > z.
// Compare total degrees first; on a tie the monomial with the larger
// exponent in the *last* variable where they differ is the smaller one.
// Returns negative / zero / positive for a < b / a == b / a > b.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (int i = 2; i >= 0; --i) {
    std::size_t k = static_cast<std::size_t>(i);
    if (a.e[k] != b.e[k]) return a.e[k] > b.e[k] ? -1 : 1;
  }
  return 0;
}

std::string to_string(const Monomial& m);  // e.g. "x^2*z", "1" for the unit

// All monomials of total degree d (empty for d < 0), in descending
// grevlex order.
std::vector<Monomial> monomials_of_degree(int d);

}  // namespace kv
