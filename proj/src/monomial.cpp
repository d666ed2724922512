#include "kv/monomial.hpp"

namespace kv {

std::string to_string(const Monomial& m) {
  static constexpr const char* names[3] = {"x", "y", "z"};
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (m.e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b) out.push_back({{a, b, d - a - b}});
  std::sort(out.begin(), out.end(), [](const Monomial& u, const Monomial& v) {
    return grevlex_cmp(u, v) > 0;
  });
  return out;
}

}  // namespace kv
