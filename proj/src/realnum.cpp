#include "autoseq/realnum.hpp"

#include <sstream>

#include "autoseq/automaton.hpp"
#include "autoseq/errors.hpp"

namespace autoseq {

namespace {

Dfao checked_machine(const SequenceSpec& spec, unsigned beta) {
  if (beta < spec.modulus())
    throw InvalidArgument("beta (" + std::to_string(beta) + ") must be at least L (" +
                          std::to_string(spec.modulus()) + ")");
  return compile(spec);
}

// Value of the digits as an exact rational, given that a(n + q) = a(n)
// for every n >= p.
Rational periodic_value(DigitStream& s, std::size_t p, std::size_t q) {
  const Rational head = s.partial_sum(p);
  Natural cycle = 0;
  for (std::size_t i = 0; i < q; ++i) cycle = cycle * s.beta() + s.digit(p + i);
  const Natural bp = power(s.beta(), p);
  const Natural bq = power(s.beta(), q);
  return head + Rational(cycle, bp * (bq - 1));
}

// Exact check that n -> a(n) is periodic with period q from index p on.
bool provably_periodic(const DigitStream& s, std::size_t p, std::size_t q) {
  const Dfao& m = s.machine();
  return equivalent(arith_subsequence(m, p, 1), arith_subsequence(m, p + q, 1));
}

}  // namespace

DigitStream::DigitStream(SequenceSpec spec, unsigned beta)
    : spec_(std::move(spec)), beta_(beta), machine_(checked_machine(spec_, beta)) {}

void DigitStream::extend(std::size_t count) {
  digits_.reserve(count);
  for (std::size_t n = digits_.size(); n < count; ++n) digits_.push_back(machine_.run(std::uint64_t{n}));
}

Residue DigitStream::digit(std::size_t n) {
  extend(n + 1);
  return digits_[n];
}

std::span<const Residue> DigitStream::prefix(std::size_t count) {
  extend(count);
  return std::span<const Residue>(digits_.data(), count);
}

Rational DigitStream::partial_sum(std::size_t terms) {
  extend(terms);
  Natural numerator = 0;
  for (std::size_t i = 0; i < terms; ++i) numerator = numerator * beta_ + digits_[i];
  return Rational(numerator, power(beta_, terms));
}

Rational DigitStream::tail_bound(std::size_t terms) const {
  return Rational(Natural(spec_.modulus() - 1), power(beta_, terms) * (beta_ - 1));
}

std::string DecimalExpansion::to_string() const { return integer_part.str() + "." + digits; }

DecimalExpansion decimal_digits(DigitStream& s, std::size_t count) {
  if (count < 1) throw InvalidArgument("digit count must be >= 1");
  const Natural scale = power(10, count);
  const Rational required(Natural(1), power(10, count + 2));

  auto split = [&](const Natural& scaled) {
    DecimalExpansion out;
    Natural frac;
    boost::multiprecision::divide_qr(scaled, scale, out.integer_part, frac);
    out.digits = frac.str();
    out.digits.insert(0, count - out.digits.size(), '0');
    return out;
  };
  auto floor_of = [](const Rational& v) {
    return Natural(boost::multiprecision::numerator(v) / boost::multiprecision::denominator(v));
  };

  std::size_t terms = 0;
  while (s.tail_bound(terms) >= required) ++terms;

  // Bracket the value; refine while the bracket straddles a digit boundary.
  const std::size_t limit = terms + 8 * (count + 64);
  for (; terms <= limit; terms += count + 64) {
    const Rational low = s.partial_sum(terms) * scale;
    const Rational high = low + s.tail_bound(terms) * scale;
    const Natural a = floor_of(low);
    if (a == floor_of(high)) return split(a);
  }

  // Only an exactly representable value approached from below stays
  // ambiguous; such streams are ultimately periodic, which is checked exactly.
  const std::size_t probe = 4096;
  const PeriodScan scan = scan_ultimate_period(s.prefix(probe), 512, 1024);
  if (scan.found && provably_periodic(s, scan.preperiod, scan.period))
    return split(floor_of(periodic_value(s, scan.preperiod, scan.period) * scale));
  throw Error("could not certify " + std::to_string(count) + " decimal digits");
}

PeriodDiagnosis diagnose_periodicity(DigitStream& s, std::size_t prefix_len, std::size_t max_period,
                                     std::size_t max_preperiod) {
  if (prefix_len <= max_preperiod + 2 * max_period)
    throw InsufficientData("prefix length must exceed max_preperiod + 2 * max_period");
  return PeriodDiagnosis{scan_ultimate_period(s.prefix(prefix_len), max_period, max_preperiod), prefix_len};
}

std::string format_beta_digits(DigitStream& s, std::size_t terms) {
  std::ostringstream out;
  out << "0.";
  const auto digits = s.prefix(terms);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (s.beta() <= 10) {
      out << static_cast<char>('0' + digits[i]);
    } else {
      if (i != 0) out << ',';
      out << digits[i];
    }
  }
  return out.str();
}

std::string format_rational(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

}  // namespace autoseq
