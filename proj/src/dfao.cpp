#include "autoseq/dfao.hpp"

#include <array>
#include <limits>
#include <sstream>

#include "autoseq/errors.hpp"

namespace autoseq {

std::string_view to_string(ReadingOrder order) {
  return order == ReadingOrder::MsbFirst ? "msb-first" : "lsb-first";
}

Dfao::Dfao(unsigned base, Residue modulus, ReadingOrder order, std::vector<StateId> transitions,
           std::vector<Residue> outputs, StateId initial)
    : base_(base),
      modulus_(modulus),
      order_(order),
      transitions_(std::move(transitions)),
      outputs_(std::move(outputs)),
      initial_(initial) {
  if (base < 2) throw InvalidArgument("automaton base must be at least 2");
  if (modulus < 1) throw InvalidArgument("automaton output modulus must be positive");
  if (outputs_.empty()) throw InvalidArgument("automaton needs at least one state");
  if (transitions_.size() != outputs_.size() * base)
    throw InvalidArgument("transition table must have states * base entries");
  if (initial_ >= outputs_.size()) throw InvalidArgument("initial state out of range");
  for (StateId q : transitions_)
    if (q >= outputs_.size()) throw InvalidArgument("transition target out of range");
  for (Residue o : outputs_)
    if (o >= modulus) throw InvalidArgument("output " + std::to_string(o) + " outside {0..L-1}");
}

StateId Dfao::feed(std::span<const Digit> lsb_first, StateId from) const noexcept {
  StateId q = from;
  if (order_ == ReadingOrder::LsbFirst) {
    for (Digit d : lsb_first) q = next(q, d);
  } else {
    for (auto it = lsb_first.rbegin(); it != lsb_first.rend(); ++it) q = next(q, *it);
  }
  return q;
}

Residue Dfao::run(const DigitExpansion& n) const {
  if (n.base() != base_) throw InvalidArgument("expansion base differs from automaton base");
  return output(feed(n.digits(), initial_));
}

Residue Dfao::run(const Natural& n) const {
  if (n >= 0 && n <= std::numeric_limits<std::uint64_t>::max()) return run(static_cast<std::uint64_t>(n));
  return run(expand(n, base_));
}

Residue Dfao::run(std::uint64_t n) const noexcept {
  std::array<Digit, 64> digits{};
  std::size_t len = 0;
  for (; n != 0; n /= base_) digits[len++] = static_cast<Digit>(n % base_);
  return output(feed(std::span<const Digit>(digits.data(), len), initial_));
}

std::string to_dot(const Dfao& d) {
  std::ostringstream out;
  out << "digraph dfao {\n";
  out << "  // base=" << d.base() << " modulus=" << d.modulus() << " order=" << to_string(d.order())
      << " states=" << d.state_count() << "\n";
  out << "  rankdir=LR;\n";
  out << "  start [shape=point];\n";
  for (StateId q = 0; q < d.state_count(); ++q)
    out << "  q" << q << " [shape=circle, label=\"" << q << "/" << d.output(q) << "\"];\n";
  out << "  start -> q" << d.initial() << ";\n";
  for (StateId q = 0; q < d.state_count(); ++q)
    for (Digit c = 0; c < d.base(); ++c)
      out << "  q" << q << " -> q" << d.next(q, c) << " [label=\"" << c << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace autoseq
