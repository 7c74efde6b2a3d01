#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "autoseq/periodicity.hpp"

namespace autoseq {

/// Which construction family applies: b_M != 0 uses U, W, T; b_M = 0
/// uses Q, S, V.
enum class RefutationBranch { LeadingNonzero, LeadingZero };

enum class RefutationPath { Constructive, Scan };

struct TraceLine {
  std::string name;
  Natural value;
  std::string digits;
  /// Outcome of the block-layout check; empty when nothing is asserted.
  std::optional<bool> layout_ok;
  std::string note;
};

struct RefutationWitness {
  Natural offset;  // N
  Natural step;    // l
  Natural witness; // n* >= 1
  Residue value_at_offset = 0;
  Residue value_at_witness = 0;
  RefutationPath path = RefutationPath::Scan;
  RefutationBranch branch = RefutationBranch::LeadingNonzero;
  /// Witness produced by the digit-block construction, when one refuted.
  std::optional<Natural> constructive_witness;
  /// Every asserted block layout held.
  bool layout_verified = false;
  std::vector<TraceLine> trace;
};

struct RefutationOptions {
  std::uint64_t scan_cap = kDefaultSearchCap;
  std::uint64_t gap_cap = kDefaultSearchCap;
};

/// Finds n* with e_P^L(N + n* l) != e_P^L(N). The digit-block
/// construction runs first and is verified by direct evaluation; the
/// reported witness is the least n*, scanned up to the constructive one.
RefutationWitness construct_refutation(const Pattern& p, Residue modulus, const Natural& offset,
                                       const Natural& step, const RefutationOptions& options = {});

std::string format_refutation(const RefutationWitness& w);
std::string format_trace_line(const TraceLine& t);

}  // namespace autoseq
