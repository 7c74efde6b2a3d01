#pragma once

// Canonical base-k digit arithmetic and digit-pattern counting.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "autoseq/natural.hpp"

namespace autoseq {

/// Base-k digits of a natural number, least significant first. Canonical:
/// zero has no digits and the most significant stored digit is nonzero.
class DigitExpansion {
 public:
  /// Throws InvalidArgument on base < 2, an out-of-range digit, or a
  /// trailing (most-significant) zero.
  DigitExpansion(unsigned base, std::vector<Digit> lsb_first);

  unsigned base() const noexcept { return base_; }
  std::span<const Digit> digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }

  /// Digit at the given exponent; zero above the top digit.
  Digit at(std::size_t exponent) const noexcept {
    return exponent < digits_.size() ? digits_[exponent] : 0;
  }

  /// Exponents of the nonzero digits in increasing order.
  std::vector<std::size_t> support() const;

  /// MSB-first rendering. Digits are single characters for k <= 10 and
  /// comma-separated decimals otherwise; zero renders as "0".
  std::string to_string() const;

  friend bool operator==(const DigitExpansion&, const DigitExpansion&) = default;

 private:
  unsigned base_;
  std::vector<Digit> digits_;
};

DigitExpansion expand(const Natural& n, unsigned base);
DigitExpansion expand(std::uint64_t n, unsigned base);
Natural assemble(const DigitExpansion& d);

/// Number of base-k digits of n (0 for n = 0).
std::size_t digit_length(const Natural& n, unsigned base);

/// A digit word b_M ... b_1 over {0..k-1}; never all zeros.
class Pattern {
 public:
  Pattern(unsigned base, std::vector<Digit> msb_first);

  /// Parses "110" (k <= 10) or a comma-separated list such as "1,12,0".
  static Pattern parse(std::string_view text, unsigned base);

  unsigned base() const noexcept { return base_; }
  std::size_t length() const noexcept { return word_.size(); }
  std::span<const Digit> word() const noexcept { return word_; }

  /// b_j for 1 <= j <= M (b_1 is the least significant letter).
  Digit letter(std::size_t j) const { return word_.at(word_.size() - j); }
  Digit leading() const noexcept { return word_.front(); }

  /// R = sum_j b_{j+1} k^j, the word read as a base-k number.
  Natural value() const;

  std::string to_string() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  unsigned base_;
  std::vector<Digit> word_;
};

/// Overlapping occurrences of p in the canonical base-k string of n.
std::size_t count_pattern(const DigitExpansion& n, const Pattern& p);
std::size_t count_pattern(const Natural& n, const Pattern& p);

/// Occurrences of digit j (1 <= j < k) in the canonical expansion of n.
std::size_t digit_count(const Natural& n, Digit j, unsigned base);

/// Total number of nonzero digits, i.e. the sum of digit_count over j.
std::size_t nonzero_digit_count(const Natural& n, unsigned base);
std::size_t nonzero_digit_count(std::uint64_t n, unsigned base);

}  // namespace autoseq
