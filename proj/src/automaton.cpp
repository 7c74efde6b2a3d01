#include "autoseq/automaton.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <tuple>

#include "autoseq/errors.hpp"

namespace autoseq {

namespace {

ReadingOrder flipped(ReadingOrder order) {
  return order == ReadingOrder::MsbFirst ? ReadingOrder::LsbFirst : ReadingOrder::MsbFirst;
}

// Breadth-first construction over hashable state keys. `step` maps (key,
// digit) to the successor key and `emit` gives the key's output.
template <class Key, class Step, class Emit>
Dfao explore(unsigned base, Residue modulus, ReadingOrder order, Key start, Step step, Emit emit,
             std::size_t state_cap) {
  std::map<Key, StateId> ids;
  std::vector<const Key*> keys;
  std::vector<StateId> transitions;
  std::vector<Residue> outputs;

  auto intern = [&](Key key) -> StateId {
    auto [it, inserted] = ids.try_emplace(std::move(key), static_cast<StateId>(keys.size()));
    if (inserted) {
      if (keys.size() >= state_cap) throw StateCapExceeded(state_cap);
      keys.push_back(&it->first);
    }
    return it->second;
  };

  intern(std::move(start));
  for (std::size_t q = 0; q < keys.size(); ++q) {
    outputs.push_back(emit(*keys[q]));
    for (Digit d = 0; d < base; ++d) {
      StateId target = intern(step(*keys[q], d));
      transitions.push_back(target);
    }
  }
  return Dfao(base, modulus, order, std::move(transitions), std::move(outputs), 0);
}

}  // namespace

Dfao build_pattern_dfao(const Pattern& p, Residue modulus) {
  if (modulus < 2) throw InvalidArgument("modulus L must be at least 2");
  const unsigned k = p.base();
  const std::size_t m = p.length();
  const std::vector<Digit> word(p.word().begin(), p.word().end());

  // (started, last min(M-1, read) digits MSB-first, count mod L)
  using Key = std::tuple<bool, std::vector<Digit>, Residue>;
  auto step = [&](const Key& key, Digit d) -> Key {
    const auto& [started, window, count] = key;
    if (!started && d == 0) return key;
    std::vector<Digit> full = window;
    full.push_back(d);
    Residue next_count = count;
    if (full.size() == m && full == word) next_count = (count + 1) % modulus;
    if (full.size() > m - 1) full.erase(full.begin());
    return Key{true, std::move(full), next_count};
  };
  auto emit = [](const Key& key) { return std::get<2>(key); };

  Dfao d = explore(k, modulus, ReadingOrder::MsbFirst, Key{false, {}, 0}, step, emit, kDefaultStateCap);

  Natural bound = 2 * Natural(modulus) * power(k, m - 1) + 1;
  if (Natural(d.state_count()) > bound) throw std::logic_error("pattern automaton exceeds its state bound");
  return d;
}

Dfao build_digitsum_dfao(unsigned base, Residue modulus) {
  if (base < 2) throw InvalidArgument("base must be at least 2");
  if (modulus < 2) throw InvalidArgument("modulus L must be at least 2");
  std::vector<StateId> transitions;
  std::vector<Residue> outputs;
  for (Residue s = 0; s < modulus; ++s) {
    outputs.push_back(s);
    transitions.push_back(s);
    for (Digit d = 1; d < base; ++d) transitions.push_back((s + 1) % modulus);
  }
  return Dfao(base, modulus, ReadingOrder::MsbFirst, std::move(transitions), std::move(outputs), 0);
}

Dfao trim(const Dfao& d) {
  const unsigned k = d.base();
  std::vector<StateId> renumber(d.state_count(), std::numeric_limits<StateId>::max());
  std::vector<StateId> order;
  renumber[d.initial()] = 0;
  order.push_back(d.initial());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Digit c = 0; c < k; ++c) {
      StateId t = d.next(order[i], c);
      if (renumber[t] == std::numeric_limits<StateId>::max()) {
        renumber[t] = static_cast<StateId>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<StateId> transitions;
  std::vector<Residue> outputs;
  transitions.reserve(order.size() * k);
  for (StateId q : order) {
    outputs.push_back(d.output(q));
    for (Digit c = 0; c < k; ++c) transitions.push_back(renumber[d.next(q, c)]);
  }
  return Dfao(k, d.modulus(), d.order(), std::move(transitions), std::move(outputs), 0);
}

Dfao minimize(const Dfao& d) {
  const Dfao t = trim(d);
  const unsigned k = t.base();
  const std::size_t n = t.state_count();

  std::vector<StateId> cls(n);
  std::size_t classes = 0;
  {
    std::map<Residue, StateId> by_output;
    for (std::size_t q = 0; q < n; ++q) {
      auto [it, inserted] = by_output.try_emplace(t.output(q), static_cast<StateId>(by_output.size()));
      cls[q] = it->second;
    }
    classes = by_output.size();
  }

  // Refinement only ever splits blocks, so an unchanged block count means
  // the partition is stable.
  for (;;) {
    std::map<std::vector<StateId>, StateId> signatures;
    std::vector<StateId> refined(n);
    std::vector<StateId> sig(k + 1);
    for (std::size_t q = 0; q < n; ++q) {
      sig[0] = cls[q];
      for (Digit c = 0; c < k; ++c) sig[c + 1] = cls[t.next(static_cast<StateId>(q), c)];
      auto [it, inserted] = signatures.try_emplace(sig, static_cast<StateId>(signatures.size()));
      refined[q] = it->second;
    }
    if (signatures.size() == classes) break;
    cls = std::move(refined);
    classes = signatures.size();
  }

  std::vector<StateId> representative(classes, std::numeric_limits<StateId>::max());
  for (std::size_t q = 0; q < n; ++q)
    if (representative[cls[q]] == std::numeric_limits<StateId>::max()) representative[cls[q]] = static_cast<StateId>(q);

  std::vector<StateId> transitions;
  std::vector<Residue> outputs;
  for (std::size_t c = 0; c < classes; ++c) {
    StateId q = representative[c];
    outputs.push_back(t.output(q));
    for (Digit dgt = 0; dgt < k; ++dgt) transitions.push_back(cls[t.next(q, dgt)]);
  }
  return trim(Dfao(k, t.modulus(), t.order(), std::move(transitions), std::move(outputs), cls[t.initial()]));
}

Dfao reverse_reading(const Dfao& d, std::size_t state_cap) {
  const Dfao src = minimize(d);
  // A state is the vector q -> output(delta(q, w)) for the digits w read so
  // far, arranged in the source machine's own reading order.
  using Key = std::vector<Residue>;
  auto step = [&](const Key& g, Digit c) {
    Key next(g.size());
    for (std::size_t q = 0; q < g.size(); ++q) next[q] = g[src.next(static_cast<StateId>(q), c)];
    return next;
  };
  auto emit = [&](const Key& g) { return g[src.initial()]; };
  Key start(src.outputs().begin(), src.outputs().end());
  return explore(src.base(), src.modulus(), flipped(src.order()), std::move(start), step, emit, state_cap);
}

Dfao with_order(const Dfao& d, ReadingOrder order, std::size_t state_cap) {
  if (d.order() == order) return d;
  return reverse_reading(d, state_cap);
}

bool equivalent(const Dfao& a, const Dfao& b, std::size_t state_cap) {
  if (a.base() != b.base()) return false;
  const Dfao other = with_order(b, a.order(), state_cap);
  const unsigned k = a.base();
  std::map<std::pair<StateId, StateId>, bool> seen;
  std::deque<std::pair<StateId, StateId>> queue;
  queue.emplace_back(a.initial(), other.initial());
  seen[queue.front()] = true;
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    if (a.output(p) != other.output(q)) return false;
    for (Digit c = 0; c < k; ++c) {
      std::pair<StateId, StateId> next{a.next(p, c), other.next(q, c)};
      if (seen.try_emplace(next, true).second) queue.push_back(next);
    }
  }
  return true;
}

bool is_leading_zero_invariant(const Dfao& d) {
  if (d.order() == ReadingOrder::MsbFirst) {
    const Dfao m = minimize(d);
    return m.next(m.initial(), 0) == m.initial();
  }
  const Dfao t = trim(d);
  for (StateId q = 0; q < t.state_count(); ++q)
    if (t.output(t.next(q, 0)) != t.output(q)) return false;
  return true;
}

Dfao arith_subsequence(const Dfao& d, const Natural& offset, const Natural& step, std::size_t state_cap) {
  if (step < 1) throw InvalidArgument("arithmetic subsequence step must be >= 1");
  if (offset < 0) throw InvalidArgument("arithmetic subsequence offset must be >= 0");
  if (!is_leading_zero_invariant(d)) throw InvalidArgument("automaton is not leading-zero invariant");

  const Dfao src = minimize(with_order(d, ReadingOrder::LsbFirst, state_cap));
  const unsigned k = src.base();
  const Natural carry_bound = offset + step;

  // (pending carry c, source state q). Reading digit e of n emits the next
  // digit of offset + n*step into the source machine.
  using Key = std::pair<Natural, StateId>;
  auto advance = [&](const Key& key, Digit e) -> Key {
    Natural v = key.first + step * e;
    Natural carry, emitted;
    boost::multiprecision::divide_qr(v, Natural(k), carry, emitted);
    if (carry > carry_bound) throw std::logic_error("carry exceeded offset + step");
    return Key{std::move(carry), src.next(key.second, static_cast<Digit>(emitted))};
  };
  auto emit = [&](const Key& key) {
    // Flush the carry: its digits are the remaining high digits.
    return src.output(src.feed(expand(key.first, k).digits(), key.second));
  };
  return explore(k, src.modulus(), ReadingOrder::LsbFirst, Key{offset, src.initial()}, advance, emit, state_cap);
}

Dfao poly_output_map(const Dfao& d, std::span<const Natural> coeffs, Residue modulus) {
  if (coeffs.empty()) throw InvalidArgument("polynomial map needs at least one coefficient");
  if (modulus < 2) throw InvalidArgument("modulus L must be at least 2");
  std::vector<Residue> outputs;
  outputs.reserve(d.state_count());
  for (Residue o : d.outputs()) {
    if (o >= modulus) throw InvalidArgument("automaton output exceeds the polynomial modulus");
    outputs.push_back(eval_poly(coeffs, o, modulus));
  }
  return Dfao(d.base(), modulus, d.order(), std::vector<StateId>(d.transitions().begin(), d.transitions().end()),
              std::move(outputs), d.initial());
}

Dfao compile(const SequenceSpec& spec, const CompileOptions& options) {
  Dfao m = std::holds_alternative<PatternCore>(spec.core())
               ? build_pattern_dfao(std::get<PatternCore>(spec.core()).pattern, spec.modulus())
               : build_digitsum_dfao(spec.base(), spec.modulus());
  for (const Transform& t : spec.transforms()) {
    if (const auto* a = std::get_if<ArithSub>(&t)) {
      m = arith_subsequence(m, a->offset, a->step, options.state_cap);
      if (options.minimize) m = minimize(m);
    } else {
      m = poly_output_map(m, std::get<PolyMap>(t).coeffs, spec.modulus());
    }
  }
  return options.minimize ? minimize(m) : m;
}

Residue run(const Dfao& d, const Natural& n) { return d.run(n); }

}  // namespace autoseq
