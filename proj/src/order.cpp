#include "kv/order.hpp"

#include "kv/error.hpp"

namespace kv {

namespace {

int top_cmp(const ModuleMonomial& a, const ModuleMonomial& b) {
  int c = grevlex_cmp(a.mono, b.mono);
  if (c != 0) return c;
  if (a.position != b.position) return a.position < b.position ? 1 : -1;
  return 0;
}

}  // namespace

MonomialOrder MonomialOrder::top() { return MonomialOrder(Kind::top); }

MonomialOrder MonomialOrder::pot() { return MonomialOrder(Kind::pot); }

MonomialOrder MonomialOrder::schreyer(std::vector<ModuleMonomial> inducing) {
  MonomialOrder o(Kind::schreyer);
  o.inducing_ = std::make_shared<const std::vector<ModuleMonomial>>(
      std::move(inducing));
  return o;
}

int MonomialOrder::cmp(const ModuleMonomial& a, const ModuleMonomial& b) const {
  switch (kind_) {
    case Kind::top:
      return top_cmp(a, b);
    case Kind::pot: {
      if (a.position != b.position) return a.position < b.position ? 1 : -1;
      return grevlex_cmp(a.mono, b.mono);
    }
    case Kind::schreyer: {
      const auto& ind = *inducing_;
      auto at = [&](const ModuleMonomial& m) -> const ModuleMonomial& {
        if (m.position < 0 || m.position >= static_cast<int>(ind.size()))
          throw EngineError("module monomial outside the inducing list");
        return ind[static_cast<std::size_t>(m.position)];
      };
      const ModuleMonomial& la = at(a);
      const ModuleMonomial& lb = at(b);
      int c = top_cmp({a.mono * la.mono, la.position},
                      {b.mono * lb.mono, lb.position});
      if (c != 0) return c;
      if (a.position != b.position) return a.position < b.position ? 1 : -1;
      return 0;
    }
  }
  throw EngineError("unreachable monomial order kind");
}

}  // namespace kv
