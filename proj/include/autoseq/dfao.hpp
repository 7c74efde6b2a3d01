#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "autoseq/base_k.hpp"

namespace autoseq {

enum class ReadingOrder { MsbFirst, LsbFirst };

std::string_view to_string(ReadingOrder order);

using StateId = std::uint32_t;

/// Deterministic finite automaton with output over the digits {0..k-1}.
///
/// Transitions are stored row-major: next(q, d) = transitions[q * k + d].
/// The machine is total and every output lies in {0..modulus-1}.
class Dfao {
 public:
  Dfao(unsigned base, Residue modulus, ReadingOrder order, std::vector<StateId> transitions,
       std::vector<Residue> outputs, StateId initial = 0);

  unsigned base() const noexcept { return base_; }
  Residue modulus() const noexcept { return modulus_; }
  ReadingOrder order() const noexcept { return order_; }
  std::size_t state_count() const noexcept { return outputs_.size(); }
  StateId initial() const noexcept { return initial_; }

  StateId next(StateId q, Digit d) const noexcept { return transitions_[q * base_ + d]; }
  Residue output(StateId q) const noexcept { return outputs_[q]; }

  std::span<const StateId> transitions() const noexcept { return transitions_; }
  std::span<const Residue> outputs() const noexcept { return outputs_; }

  /// Feeds lsb-first digits in the machine's reading order from `from`.
  StateId feed(std::span<const Digit> lsb_first, StateId from) const noexcept;

  Residue run(const DigitExpansion& n) const;
  Residue run(const Natural& n) const;
  Residue run(std::uint64_t n) const noexcept;

  friend bool operator==(const Dfao&, const Dfao&) = default;

 private:
  unsigned base_;
  Residue modulus_;
  ReadingOrder order_;
  std::vector<StateId> transitions_;
  std::vector<Residue> outputs_;
  StateId initial_;
};

/// Graphviz rendering with states and edges in id / digit order.
std::string to_dot(const Dfao& d);

}  // namespace autoseq
