#pragma once

// Exact evaluation of sum_n a(n) / beta^(n+1).

#include <cstddef>
#include <string>
#include <vector>

#include "autoseq/dfao.hpp"
#include "autoseq/periodicity.hpp"
#include "autoseq/sequence_spec.hpp"

namespace autoseq {

/// Base-beta digits d_1 d_2 ... with d_{n+1} = a(n). Extending the prefix
/// mutates the stream; copies are independent.
class DigitStream {
 public:
  /// Throws InvalidArgument when beta < L.
  DigitStream(SequenceSpec spec, unsigned beta);

  const SequenceSpec& spec() const noexcept { return spec_; }
  unsigned beta() const noexcept { return beta_; }
  const Dfao& machine() const noexcept { return machine_; }

  /// a(n), i.e. the digit d_{n+1}.
  Residue digit(std::size_t n);
  std::span<const Residue> prefix(std::size_t count);

  /// sum_{n<T} d_{n+1} / beta^(n+1), in lowest terms.
  Rational partial_sum(std::size_t terms);

  /// (L-1) / (beta^T (beta-1)), an upper bound on value - partial_sum(T).
  Rational tail_bound(std::size_t terms) const;

 private:
  void extend(std::size_t count);

  SequenceSpec spec_;
  unsigned beta_;
  Dfao machine_;
  std::vector<Residue> digits_;
};

struct DecimalExpansion {
  Natural integer_part;
  std::string digits;  // truncated fractional digits
  std::string to_string() const;
};

/// First `count` decimal digits of the value, truncated. Falls back to an
/// exact rational value when the stream is provably ultimately periodic.
DecimalExpansion decimal_digits(DigitStream& s, std::size_t count);

struct PeriodDiagnosis {
  PeriodScan scan;
  std::size_t prefix_len = 0;
};

PeriodDiagnosis diagnose_periodicity(DigitStream& s, std::size_t prefix_len, std::size_t max_period,
                                     std::size_t max_preperiod);

/// "0." followed by the first T base-beta digits.
std::string format_beta_digits(DigitStream& s, std::size_t terms);

/// "numerator/denominator" in lowest terms.
std::string format_rational(const Rational& r);

}  // namespace autoseq
