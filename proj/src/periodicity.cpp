#include "autoseq/periodicity.hpp"

#include <sstream>

#include "autoseq/automaton.hpp"
#include "autoseq/errors.hpp"

namespace autoseq {

namespace {

// Inverse of a modulo m, assuming gcd(a, m) = 1 and m >= 2.
Natural inverse_mod(const Natural& a, const Natural& m) {
  Natural r0 = m, r1 = a % m;
  Natural s0 = 0, s1 = 1;
  while (r1 != 0) {
    Natural q = r0 / r1;
    Natural r2 = r0 - q * r1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    Natural s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Natural inv = s0 % m;
  if (inv < 0) inv += m;
  return inv;
}

void validate(const GapQuery& q) {
  if (q.step < 1) throw InvalidArgument("step l must be >= 1");
  if (q.base < 2) throw InvalidArgument("base must be at least 2");
  if (q.match_exponent && *q.match_exponent < q.floor_exponent)
    throw InvalidMatch("requested lowest exponent " + std::to_string(*q.match_exponent) +
                       " is below the floor " + std::to_string(q.floor_exponent));
}

GapWitness describe(const Natural& x, const Natural& step, unsigned base) {
  GapWitness w;
  w.x = x;
  w.multiple = x * step;
  auto support = expand(w.multiple, base).support();
  w.lowest_exponent = support.front();
  if (support.size() > 1) w.gap = support[1] - support[0];
  return w;
}

}  // namespace

GapWitness find_gap_multiple(const GapQuery& query) {
  validate(query);
  const Natural modulus = power(query.base, query.min_gap + 1);  // u = 1 (mod k^(t+1))
  const Natural& l = query.step;

  std::optional<Natural> best;
  std::uint64_t examined = 0;
  std::size_t w = query.match_exponent.value_or(query.floor_exponent);
  for (;; ++w) {
    const Natural scale = power(query.base, w);
    if (best && scale > *best) break;
    if (++examined > query.cap) throw CapExceeded(query.cap, "no gap multiple found");

    // x*l = k^w * u with u = 1 (mod k^(t+1)); l must divide k^w * u.
    const Natural reduced = l / boost::multiprecision::gcd(l, scale);
    if (boost::multiprecision::gcd(reduced, modulus) == 1) {
      Natural u = reduced == 1 ? Natural(1) : reduced * inverse_mod(reduced, modulus);
      Natural m = scale * u;
      if (!best || m < *best) best = std::move(m);
    }
    if (query.match_exponent) break;
  }
  if (!best) {
    throw InvalidMatch("no multiple of " + l.str() + " has its lowest digit 1 at exponent " +
                       std::to_string(*query.match_exponent) + " with the required gap");
  }
  GapWitness w_out = describe(*best / l, l, query.base);
  if (!verify_gap_witness(w_out, query)) throw std::logic_error("gap multiple failed re-verification");
  return w_out;
}

GapWitness find_gap_multiple_scan(const GapQuery& query) {
  validate(query);
  Natural m = 0;
  for (std::uint64_t x = 1; x <= query.cap; ++x) {
    m += query.step;
    auto digits = expand(m, query.base);
    auto support = digits.support();
    const std::size_t w1 = support.front();
    if (digits.at(w1) != 1 || w1 < query.floor_exponent) continue;
    if (query.match_exponent && w1 != *query.match_exponent) continue;
    if (support.size() > 1 && support[1] - w1 <= query.min_gap) continue;
    return describe(Natural(x), query.step, query.base);
  }
  throw CapExceeded(query.cap, "no gap multiple found by scan");
}

bool verify_gap_witness(const GapWitness& w, const GapQuery& query) {
  if (w.x < 1 || w.x * query.step != w.multiple) return false;
  const auto digits = expand(w.multiple, query.base);
  const auto support = digits.support();
  if (support.empty() || support.front() != w.lowest_exponent) return false;
  if (digits.at(w.lowest_exponent) != 1) return false;
  if (w.lowest_exponent < query.floor_exponent) return false;
  if (query.match_exponent && w.lowest_exponent != *query.match_exponent) return false;
  if (support.size() == 1) return !w.gap.has_value();
  if (!w.gap || *w.gap != support[1] - support[0]) return false;
  for (std::size_t e = w.lowest_exponent + 1; e < w.lowest_exponent + *w.gap; ++e)
    if (digits.at(e) != 0) return false;
  return *w.gap > query.min_gap;
}

std::string format_gap_witness(const GapWitness& w) {
  std::ostringstream out;
  out << "x=" << w.x << " xl=" << w.multiple << " w1=" << w.lowest_exponent << " gap=";
  if (w.gap)
    out << *w.gap;
  else
    out << "inf";
  return out.str();
}

ResidueSolution solve_residue(const Natural& step, Residue target, Residue modulus, unsigned base,
                              ResidueStrategy strategy, std::uint64_t cap) {
  if (step < 1) throw InvalidArgument("step l must be >= 1");
  if (modulus < 2) throw InvalidArgument("modulus L must be at least 2");
  if (target < 1 || target > modulus) throw InvalidArgument("target residue must lie in 1..L");
  const Residue goal = target % modulus;
  auto residue_of = [&](const Natural& t) {
    return static_cast<Residue>(nonzero_digit_count(t * step, base) % modulus);
  };

  ResidueSolution solution;
  if (strategy == ResidueStrategy::Constructive) {
    // x*l = k^w (1 + k^g ...) with g > 1. Overlapping L copies shifted by
    // the span A merge L-1 pairs of digits, leaving L e(xl) - (L-1) = 1 (mod L)
    // nonzero digits; then `goal` disjoint copies of that block give `goal`.
    GapWitness gw = find_gap_multiple(GapQuery{step, 1, base, 0, std::nullopt, cap});
    const auto support = expand(gw.multiple, base).support();
    const std::size_t span = support.back() - support.front();
    Natural big_x = 0;
    if (span == 0) {
      big_x = gw.x;
    } else {
      for (Residue j = 0; j < modulus; ++j) big_x += power(base, j * span) * gw.x;
    }
    const std::size_t spacing = static_cast<std::size_t>(modulus) * span + 1;
    Natural y = 0;
    const Residue copies = goal == 0 ? modulus : goal;
    for (Residue j = 0; j < copies; ++j) y += power(base, j * spacing);
    Natural t = y * big_x;

    solution.trace.push_back("x=" + gw.x.str() + " xl=" + gw.multiple.str() + " A=" + std::to_string(span));
    solution.trace.push_back("X=" + big_x.str() + " e(Xl)mod L=" + std::to_string(residue_of(big_x)));
    solution.trace.push_back("y=" + y.str() + " t=" + t.str());
    if (residue_of(big_x) == 1 % modulus && residue_of(t) == goal) {
      solution.t = std::move(t);
      solution.used = ResidueStrategy::Constructive;
      return solution;
    }
    solution.trace.push_back("ConstructionMismatch: falling back to scan");
  }

  for (std::uint64_t t = 1; t <= cap; ++t) {
    if (residue_of(Natural(t)) == goal) {
      solution.t = t;
      solution.used = ResidueStrategy::Scan;
      return solution;
    }
  }
  throw CapExceeded(cap, "no t found with the requested digit-count residue");
}

CoefficientCheck check_coefficient_condition(std::span<const Natural> coeffs, Residue modulus) {
  if (coeffs.empty()) throw InvalidArgument("coefficient list must be non-empty");
  if (modulus < 2) throw InvalidArgument("modulus L must be at least 2");
  CoefficientCheck check;
  for (Residue s = 1; s < modulus; ++s) {
    Residue v = eval_poly(coeffs, s, modulus);
    check.table.push_back(v);
    if (v != 0 && !check.witness) check.witness = s;
  }
  check.passes = check.witness.has_value();
  return check;
}

bool NonperiodicityReport::all_resolved() const {
  for (const auto& e : entries)
    if (!e.witness) return false;
  return true;
}

NonperiodicityReport scan_everywhere_nonperiodic(const SequenceSpec& spec, std::uint64_t max_offset,
                                                 std::uint64_t max_step, std::uint64_t budget) {
  if (max_step < 1 || budget < 1) throw InvalidArgument("scan bounds must be >= 1");
  const Dfao machine = compile(spec);
  NonperiodicityReport report;
  report.budget = budget;
  for (std::uint64_t offset = 0; offset <= max_offset; ++offset) {
    for (std::uint64_t step = 1; step <= max_step; ++step) {
      ScanEntry entry{offset, step, machine.run(Natural(offset)), std::nullopt, 0};
      Natural index = offset;
      for (std::uint64_t n = 1; n <= budget; ++n) {
        index += step;
        Residue v = machine.run(index);
        if (v != entry.value_at_offset) {
          entry.witness = n;
          entry.value_at_witness = v;
          break;
        }
      }
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

std::string format_scan_entry(const ScanEntry& e, std::uint64_t budget) {
  std::ostringstream out;
  out << "N=" << e.offset << " l=" << e.step;
  if (e.witness)
    out << " witness=" << *e.witness << " vN=" << e.value_at_offset << " vW=" << e.value_at_witness;
  else
    out << " UNRESOLVED budget=" << budget;
  return out.str();
}

PeriodScan scan_ultimate_period(std::span<const Residue> values, std::size_t max_period,
                                std::size_t max_preperiod) {
  if (max_period < 1) throw InvalidArgument("max_period must be >= 1");
  if (values.size() <= max_preperiod + 2 * max_period)
    throw InsufficientData("need more than " + std::to_string(max_preperiod + 2 * max_period) +
                           " values, got " + std::to_string(values.size()));
  for (std::size_t p = 1; p <= max_period; ++p) {
    // The least admissible preperiod is one past the last mismatch.
    std::size_t pre = 0;
    for (std::size_t i = values.size() - p; i-- > 0;) {
      if (values[i] != values[i + p]) {
        pre = i + 1;
        break;
      }
    }
    if (pre <= max_preperiod) return PeriodScan{true, p, pre};
  }
  return PeriodScan{};
}

std::string format_period_scan(const PeriodScan& s) {
  if (!s.found) return "none_below_bounds";
  return "found period=" + std::to_string(s.period) + " preperiod=" + std::to_string(s.preperiod) +
         " (prefix only)";
}

}  // namespace autoseq
