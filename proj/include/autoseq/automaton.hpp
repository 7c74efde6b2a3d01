#pragma once

// DFAO construction, minimization and closure transforms.

#include <cstddef>
#include <span>
#include <vector>

#include "autoseq/dfao.hpp"
#include "autoseq/sequence_spec.hpp"

namespace autoseq {

inline constexpr std::size_t kDefaultStateCap = 1'000'000;

/// MSB-first sliding-window machine for e_P(n) mod L. A state remembers
/// whether a nonzero digit has been read, the last min(M-1, read) digits
/// since then, and the running count mod L.
Dfao build_pattern_dfao(const Pattern& p, Residue modulus);

/// L-state machine counting nonzero digits mod L.
Dfao build_digitsum_dfao(unsigned base, Residue modulus);

/// Restricts to states reachable from the initial state, renumbered in
/// breadth-first order (digits ascending).
Dfao trim(const Dfao& d);

/// Moore partition refinement. The result is trimmed and canonically
/// numbered, so equivalent machines minimize to equal objects.
Dfao minimize(const Dfao& d);

/// Same sequence, opposite reading order (subset-style construction over
/// output vectors). Throws StateCapExceeded above `state_cap` states.
Dfao reverse_reading(const Dfao& d, std::size_t state_cap = kDefaultStateCap);

Dfao with_order(const Dfao& d, ReadingOrder order, std::size_t state_cap = kDefaultStateCap);

/// True when both machines compute the same sequence (n -> output).
bool equivalent(const Dfao& a, const Dfao& b, std::size_t state_cap = kDefaultStateCap);

/// Extra zeros at the most significant end never change the output.
bool is_leading_zero_invariant(const Dfao& d);

/// LSB-first machine for n -> d(offset + n * step): d is composed with an
/// affine carry transducer.
Dfao arith_subsequence(const Dfao& d, const Natural& offset, const Natural& step,
                       std::size_t state_cap = kDefaultStateCap);

/// Output relabelling o -> sum_m coeffs[m] o^m mod L.
Dfao poly_output_map(const Dfao& d, std::span<const Natural> coeffs, Residue modulus);

struct CompileOptions {
  bool minimize = true;
  std::size_t state_cap = kDefaultStateCap;
};

/// Builds the core machine and folds the transform stack over it.
Dfao compile(const SequenceSpec& spec, const CompileOptions& options = {});

Residue run(const Dfao& d, const Natural& n);

/// Identifies the kernel subsequence n -> a(k^e n + j).
struct KernelElement {
  std::size_t exponent = 0;
  Natural offset = 0;
  friend bool operator==(const KernelElement&, const KernelElement&) = default;
};

struct KernelEntry {
  KernelElement element;  // first (e, j) found for this class, breadth-first
  std::size_t state = 0;  // class id, equal to the index of the entry
};

struct KernelClosure {
  bool stabilized = false;
  /// Deepest level examined; when stabilized, the first level that
  /// contributed no new class.
  std::size_t depth = 0;
  std::vector<KernelEntry> elements;
  std::size_t size() const noexcept { return elements.size(); }
};

/// Distinct kernel subsequences with e <= depth_bound. Two (e, j) are
/// identified only when their sequences are equal for every n.
KernelClosure kernel(const Dfao& d, std::size_t depth_bound,
                     std::size_t state_cap = kDefaultStateCap);

}  // namespace autoseq
