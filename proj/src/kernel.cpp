#include "autoseq/automaton.hpp"

#include <map>

#include "autoseq/errors.hpp"

namespace autoseq {

namespace {

struct Frontier {
  std::size_t cls;
  KernelElement element;
};

// Level-by-level closure shared by both reading orders. `child(cls, digit)`
// returns the class of (e+1, j + digit*k^e) given the class of (e, j).
template <class Child>
KernelClosure close_levels(unsigned k, std::size_t depth_bound, Child child) {
  KernelClosure result;
  result.elements.push_back({KernelElement{0, 0}, 0});
  std::vector<Frontier> frontier{{0, KernelElement{0, 0}}};
  std::size_t known = 1;

  for (std::size_t e = 0; e < depth_bound; ++e) {
    std::vector<Frontier> next;
    const Natural scale = power(k, e);
    for (const auto& f : frontier) {
      for (Digit d = 0; d < k; ++d) {
        std::size_t c = child(f.cls, d);
        if (c < known) continue;
        // child() hands out fresh ids densely, in discovery order.
        KernelElement element{e + 1, f.element.offset + scale * d};
        result.elements.push_back({element, c});
        next.push_back({c, std::move(element)});
        known = c + 1;
      }
    }
    result.depth = e + 1;
    if (next.empty()) {
      result.stabilized = true;
      return result;
    }
    frontier = std::move(next);
  }
  return result;
}

}  // namespace

KernelClosure kernel(const Dfao& d, std::size_t depth_bound, std::size_t state_cap) {
  if (!is_leading_zero_invariant(d)) throw InvalidArgument("automaton is not leading-zero invariant");

  if (d.order() == ReadingOrder::LsbFirst) {
    // (e, j) corresponds to the state reached on the e-digit padding of j;
    // equal sequences are exactly Moore-equivalent states.
    const Dfao m = minimize(d);
    std::map<StateId, std::size_t> ids{{m.initial(), 0}};
    std::vector<StateId> states{m.initial()};
    return close_levels(m.base(), depth_bound, [&](std::size_t cls, Digit digit) {
      StateId target = m.next(states[cls], digit);
      auto [it, inserted] = ids.try_emplace(target, states.size());
      if (inserted) states.push_back(target);
      return it->second;
    });
  }

  // MSB-first: (e, j) induces the output vector q -> output(delta(q, pad_e(j))).
  // Restricted to reachable states this vector identifies the subsequence.
  const Dfao t = trim(d);
  using Vec = std::vector<Residue>;
  std::map<Vec, std::size_t> ids;
  std::vector<const Vec*> vectors;
  auto intern = [&](Vec v) {
    auto [it, inserted] = ids.try_emplace(std::move(v), vectors.size());
    if (inserted) {
      if (vectors.size() >= state_cap) throw StateCapExceeded(state_cap);
      vectors.push_back(&it->first);
    }
    return it->second;
  };
  intern(Vec(t.outputs().begin(), t.outputs().end()));
  return close_levels(t.base(), depth_bound, [&](std::size_t cls, Digit digit) {
    const Vec& g = *vectors[cls];
    Vec child(g.size());
    for (std::size_t q = 0; q < g.size(); ++q) child[q] = g[t.next(static_cast<StateId>(q), digit)];
    return intern(std::move(child));
  });
}

}  // namespace autoseq
