// Hilbert functions and polynomials.  The Gröbner route counts monomials
// outside the lead-term module positionwise, by inclusion–exclusion over
// the minimal lead monomials; sampling plus an exact quadratic fit with a
// certified stabilization window produces the Hilbert polynomial.  An
// independent Gaussian-elimination oracle recomputes dimensions without
// any Gröbner machinery for cross-checks.

#include "kv/hilbert.hpp"

#include <algorithm>

#include "kv/error.hpp"
#include "kv/linalg.hpp"
#include "kv/modalg.hpp"

namespace kv {

namespace {

// number of monomials of degree t in three variables
long long monomial_count(int t) {
  return t < 0 ? 0 : static_cast<long long>(t + 2) * (t + 1) / 2;
}

constexpr std::size_t kSubsetLimit = 18;  // beyond this, enumerate directly

}  // namespace

std::string to_string(HalfInt h) {
  std::string s = std::to_string(h.num);
  return h.den == 2 ? s + "/2" : s;
}

long long HilbertData::eval(int n) const {
  long long nn = n;
  long long twice = coeff[2].twice() * nn * nn + coeff[1].twice() * nn +
                    coeff[0].twice();
  if (twice % 2 != 0)
    throw EngineError("Hilbert polynomial evaluated to a half-integer");
  return twice / 2;
}

long long HilbertData::value_at(int n) const {
  auto it = values.find(n);
  if (it != values.end()) return it->second;
  if (n >= stable_from) return eval(n);
  throw EngineError("Hilbert value requested below the sampled range");
}

HilbertData hilbert_difference(const HilbertData& a, const HilbertData& b) {
  HilbertData d;
  for (std::size_t i = 0; i < 3; ++i) d.coeff[i] = a.coeff[i] - b.coeff[i];
  int hi = 0;
  if (!a.values.empty()) hi = std::max(hi, a.values.rbegin()->first);
  if (!b.values.empty()) hi = std::max(hi, b.values.rbegin()->first);
  for (int n = 0; n <= hi; ++n)
    d.values[n] = a.value_at(n) - b.value_at(n);
  d.stable_from = hi;
  while (d.stable_from > 0 &&
         d.values.at(d.stable_from - 1) == d.eval(d.stable_from - 1))
    --d.stable_from;
  return d;
}

HilbertEvaluator::HilbertEvaluator(const Submodule& m)
    : ambient_(m.ambient) {
  build(buchberger(m));
}

HilbertEvaluator::HilbertEvaluator(const GroebnerBasis& gb)
    : ambient_(gb.ambient()) {
  build(gb);
}

void HilbertEvaluator::build(const GroebnerBasis& gb) {
  positions_.resize(static_cast<std::size_t>(ambient_.rank()));
  for (int k = 0; k < gb.size(); ++k)
    positions_[static_cast<std::size_t>(gb.lead(k).position)]
        .min_leads.push_back(gb.lead(k).mono);

  for (Position& p : positions_) {
    // drop non-minimal monomials (a reduced basis already has none)
    std::vector<Monomial> min;
    for (const Monomial& m : p.min_leads) {
      bool redundant = false;
      for (const Monomial& o : p.min_leads)
        if (!(o == m) && o.divides(m)) {
          redundant = true;
          break;
        }
      if (!redundant && std::find(min.begin(), min.end(), m) == min.end())
        min.push_back(m);
    }
    p.min_leads = std::move(min);
    if (p.min_leads.empty()) continue;

    Monomial all = p.min_leads[0];
    for (const Monomial& m : p.min_leads) all = lcm(all, m);
    p.max_term_degree = all.degree();

    if (p.min_leads.size() > kSubsetLimit) {
      p.direct = true;
      continue;
    }
    // inclusion–exclusion over nonempty subsets: odd-size subsets count
    // positively, even-size negatively, keyed by the subset lcm degree
    std::map<int, long long> signed_map;
    auto dfs = [&](auto&& self, std::size_t idx, const Monomial& cur,
                   int size) -> void {
      if (idx == p.min_leads.size()) {
        if (size > 0) signed_map[cur.degree()] += size % 2 == 1 ? 1 : -1;
        return;
      }
      self(self, idx + 1, cur, size);
      self(self, idx + 1, lcm(cur, p.min_leads[idx]), size + 1);
    };
    dfs(dfs, 0, Monomial::one(), 0);
    for (auto& [deg, c] : signed_map)
      if (c != 0) p.signed_degrees.push_back({deg, c});
  }
}

long long HilbertEvaluator::position_dim(const Position& p,
                                         int internal_degree) const {
  if (internal_degree < 0 || p.min_leads.empty()) return 0;
  if (!p.direct) {
    long long total = 0;
    for (const auto& [deg, c] : p.signed_degrees)
      total += c * monomial_count(internal_degree - deg);
    return total;
  }
  long long total = 0;
  for (const Monomial& m : monomials_of_degree(internal_degree))
    for (const Monomial& g : p.min_leads)
      if (g.divides(m)) {
        ++total;
        break;
      }
  return total;
}

long long HilbertEvaluator::submodule_dim(int n) const {
  long long total = 0;
  for (std::size_t j = 0; j < positions_.size(); ++j)
    total += position_dim(positions_[j], n - ambient_.twists[j]);
  return total;
}

long long HilbertEvaluator::quotient_dim(int n) const {
  long long free_dim = 0;
  for (int a : ambient_.twists) free_dim += monomial_count(n - a);
  return free_dim - submodule_dim(n);
}

int HilbertEvaluator::stabilization_hint() const {
  int hint = 0;
  for (std::size_t j = 0; j < positions_.size(); ++j)
    hint = std::max(hint, ambient_.twists[j] +
                              positions_[j].max_term_degree - 2);
  return hint;
}

namespace {

HilbertData fit_from_samples(const std::map<int, long long>& samples,
                             int n0) {
  auto v = [&](int n) { return samples.at(n); };
  int a = n0 - 2;
  long long d2 = v(n0) - 2 * v(n0 - 1) + v(n0 - 2);
  long long d1 = v(a + 1) - v(a);
  HilbertData h;
  h.values = samples;
  h.coeff[2] = HalfInt::halves(d2);
  h.coeff[1] = HalfInt::halves(2 * d1 - d2 * (2LL * a + 1));
  h.coeff[0] = HalfInt::halves(2 * v(a) - 2LL * a * d1 + d2 * a * (a + 1LL));
  for (int n = n0 - 6; n <= n0; ++n)
    if (h.eval(n) != v(n))
      throw EngineError(
          "Hilbert polynomial failed to stabilize within the certified "
          "window ending at degree " +
          std::to_string(n0));
  h.stable_from = n0;
  while (h.stable_from > 0 &&
         samples.at(h.stable_from - 1) == h.eval(h.stable_from - 1))
    --h.stable_from;
  return h;
}

}  // namespace

long long hilbert_function(const GradedModule& m, int n) {
  HilbertEvaluator ev(m.sub);
  return m.quotient ? ev.quotient_dim(n) : ev.submodule_dim(n);
}

HilbertData hilbert_polynomial(const GradedModule& m, int degree_cap) {
  HilbertEvaluator ev(m.sub);
  int n0 = std::max(0, ev.stabilization_hint()) + 6;
  if (n0 > degree_cap)
    throw InputError("degree cap " + std::to_string(degree_cap) +
                     " too small: stabilization needs sampling up to " +
                     std::to_string(n0));
  std::map<int, long long> samples;
  for (int n = 0; n <= n0; ++n)
    samples[n] = m.quotient ? ev.quotient_dim(n) : ev.submodule_dim(n);
  return fit_from_samples(samples, n0);
}

HilbertData hilbert_of_free(const FreeModule& f) {
  HilbertData h;
  int max_twist = 0;
  long long twice_c0 = 0, twice_c1 = 0, twice_c2 = 0;
  for (int a : f.twists) {
    max_twist = std::max(max_twist, a);
    // dim R(-a)_n = (n-a+2)(n-a+1)/2 = ½n² + (3-2a)/2·n + (a-1)(a-2)/2
    twice_c2 += 1;
    twice_c1 += 3 - 2LL * a;
    twice_c0 += (a - 1LL) * (a - 2LL);
  }
  h.coeff[2] = HalfInt::halves(twice_c2);
  h.coeff[1] = HalfInt::halves(twice_c1);
  h.coeff[0] = HalfInt::halves(twice_c0);

  int n0 = std::max(0, max_twist) + 4;
  for (int n = 0; n <= n0; ++n) {
    long long d = 0;
    for (int a : f.twists) d += monomial_count(n - a);
    h.values[n] = d;
  }
  h.stable_from = n0;
  while (h.stable_from > 0 &&
         h.values.at(h.stable_from - 1) == h.eval(h.stable_from - 1))
    --h.stable_from;
  return h;
}

long long degree_of_Z(const Submodule& ideal, int degree_cap) {
  if (ideal.ambient.rank() != 1 || ideal.ambient.twists[0] != 0)
    throw InputError("basepoint degree needs an ideal in R");
  Submodule sat = saturate(ideal);
  HilbertData h =
      hilbert_polynomial(GradedModule::of_quotient(sat), degree_cap);
  if (!h.is_constant())
    throw InputError(
        "not zero-dimensional: the basepoint locus has a curve component");
  if (h.coeff[0].den != 1)
    throw EngineError("constant Hilbert polynomial with half-integer value");
  long long deg = h.coeff[0].num;
  if (deg == 0)
    throw InputError(
        "empty basepoint locus: the generators have no common zero");
  return deg;
}

namespace {

struct DegreeFrame {
  // column layout of the degree-n piece of the ambient free module
  std::vector<std::vector<Monomial>> monos;  // per position
  std::vector<std::size_t> offset;
  std::size_t total = 0;

  DegreeFrame(const FreeModule& f, int n) {
    monos.resize(f.twists.size());
    offset.resize(f.twists.size());
    for (std::size_t j = 0; j < f.twists.size(); ++j) {
      monos[j] = monomials_of_degree(n - f.twists[j]);
      offset[j] = total;
      total += monos[j].size();
    }
  }

  std::size_t column(std::size_t pos, const Monomial& m) const {
    const auto& list = monos[pos];
    for (std::size_t i = 0; i < list.size(); ++i)
      if (list[i] == m) return offset[pos] + i;
    throw EngineError("monomial outside the degree frame");
  }
};

std::vector<std::vector<Fp>> multiple_matrix(const Submodule& m, int n,
                                             const DegreeFrame& frame) {
  std::vector<std::vector<Fp>> rows;
  for (const ModuleElement& g : m.generators) {
    if (g.is_zero()) continue;
    auto d = g.module_degree();
    if (!d)
      throw InputError("dimension counting needs homogeneous generators");
    for (const Monomial& u : monomials_of_degree(n - *d)) {
      std::vector<Fp> row(frame.total);
      for (int j = 0; j < m.ambient.rank(); ++j)
        for (const Term& t : g[j].terms())
          row[frame.column(static_cast<std::size_t>(j), t.mono * u)] = t.coeff;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

long long oracle_hilbert(const GradedModule& m, int n) {
  DegreeFrame frame(m.sub.ambient, n);
  long long rank = rank_of(multiple_matrix(m.sub, n, frame));
  return m.quotient ? static_cast<long long>(frame.total) - rank : rank;
}

std::vector<Polynomial> homogeneous_ideal_basis(const Submodule& ideal,
                                                int n) {
  if (ideal.ambient.rank() != 1)
    throw InputError("homogeneous basis extraction needs a rank-1 submodule");
  DegreeFrame frame(ideal.ambient, n);
  auto rows = multiple_matrix(ideal, n, frame);
  row_reduce(rows);
  std::vector<Polynomial> out;
  for (const auto& row : rows) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < row.size(); ++c)
      if (!row[c].is_zero()) terms.push_back({row[c], frame.monos[0][c]});
    out.push_back(Polynomial::from_terms(std::move(terms)));
  }
  return out;
}

}  // namespace kv
