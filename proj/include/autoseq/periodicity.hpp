#pragma once

// Witness searches for everywhere-non-periodicity and bounded period scans.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "autoseq/sequence_spec.hpp"

namespace autoseq {

inline constexpr std::uint64_t kDefaultSearchCap = 10'000'000;

/// A multiple x*l whose lowest nonzero base-k digit is a 1 at exponent
/// `lowest_exponent`, followed by `gap - 1` zero digits before the next
/// nonzero one. An empty gap means x*l is a power of k.
struct GapWitness {
  Natural x;
  Natural multiple;
  std::size_t lowest_exponent = 0;
  std::optional<std::size_t> gap;
};

struct GapQuery {
  Natural step = 1;              // l
  std::size_t min_gap = 0;       // the gap must exceed this
  unsigned base = 2;
  std::size_t floor_exponent = 0;
  std::optional<std::size_t> match_exponent;
  std::uint64_t cap = kDefaultSearchCap;
};

/// Least x satisfying the query. Exponents are examined in increasing
/// order and the least admissible multiple for each is obtained by CRT,
/// so the cap counts exponents rather than values of x.
GapWitness find_gap_multiple(const GapQuery& query);

/// Same contract by scanning x = 1, 2, ... up to the cap.
GapWitness find_gap_multiple_scan(const GapQuery& query);

/// Re-expands the multiple and checks every digit-level requirement.
bool verify_gap_witness(const GapWitness& w, const GapQuery& query);

std::string format_gap_witness(const GapWitness& w);

enum class ResidueStrategy { Scan, Constructive };

struct ResidueSolution {
  Natural t;
  ResidueStrategy used = ResidueStrategy::Scan;
  std::vector<std::string> trace;
};

/// Some t >= 1 with (nonzero digits of t*l) = target (mod L). Scan returns
/// the least such t; Constructive stacks shifted gap multiples and falls
/// back to the scan if its self-check fails.
ResidueSolution solve_residue(const Natural& step, Residue target, Residue modulus, unsigned base,
                              ResidueStrategy strategy = ResidueStrategy::Scan,
                              std::uint64_t cap = kDefaultSearchCap);

struct CoefficientCheck {
  bool passes = false;
  std::optional<Residue> witness;  // least s in 1..L-1 with p(s) != 0
  std::vector<Residue> table;      // p(s) mod L for s = 1..L-1
};

CoefficientCheck check_coefficient_condition(std::span<const Natural> coeffs, Residue modulus);

struct ScanEntry {
  Natural offset;
  Natural step;
  Residue value_at_offset = 0;
  std::optional<Natural> witness;
  Residue value_at_witness = 0;
};

struct NonperiodicityReport {
  std::uint64_t budget = 0;
  std::vector<ScanEntry> entries;  // ordered by (offset, step)
  bool all_resolved() const;
};

/// For N <= max_offset and 1 <= l <= max_step, the least n <= budget with
/// a(N + n l) != a(N). Unresolved entries are never reported as periodic.
NonperiodicityReport scan_everywhere_nonperiodic(const SequenceSpec& spec, std::uint64_t max_offset,
                                                 std::uint64_t max_step, std::uint64_t budget);

/// "N=<n> l=<l> witness=<n*> vN=<v> vW=<v>" or "N=<n> l=<l> UNRESOLVED budget=<b>".
std::string format_scan_entry(const ScanEntry& e, std::uint64_t budget);

/// Statement about a finite prefix only.
struct PeriodScan {
  bool found = false;
  std::size_t period = 0;
  std::size_t preperiod = 0;
};

/// Least period <= max_period (then least preperiod <= max_preperiod)
/// consistent with the whole prefix. Throws InsufficientData unless
/// values.size() > max_preperiod + 2 * max_period.
PeriodScan scan_ultimate_period(std::span<const Residue> values, std::size_t max_period,
                                std::size_t max_preperiod);

std::string format_period_scan(const PeriodScan& s);

}  // namespace autoseq
