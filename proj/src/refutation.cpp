#include "autoseq/refutation.hpp"

#include <sstream>

#include "autoseq/automaton.hpp"
#include "autoseq/errors.hpp"

namespace autoseq {

namespace {

struct Candidate {
  std::string name;        // name of the product multiple * l in the trace
  Natural multiplier;      // the candidate index n*
  std::optional<bool> layout;
  std::string note;
};

// n mod k^width == expected: the low `width` digits of n are exactly those of
// `expected`, which pins both a digit block and the zero runs around it.
bool low_digits_are(const Natural& n, const Natural& expected, unsigned base, std::size_t width) {
  return n % power(base, width) == expected;
}

Natural ones(unsigned base, std::size_t from, std::size_t to_exclusive) {
  Natural r = 0;
  for (std::size_t i = from; i < to_exclusive; ++i) r += power(base, i);
  return r;
}

}  // namespace

RefutationWitness construct_refutation(const Pattern& p, Residue modulus, const Natural& offset,
                                       const Natural& step, const RefutationOptions& options) {
  if (modulus < 2) throw InvalidArgument("modulus L must be at least 2");
  if (step < 1) throw InvalidArgument("step l must be >= 1");
  if (offset < 0) throw InvalidArgument("offset N must be >= 0");

  const unsigned k = p.base();
  const std::size_t m = p.length();
  const Natural r = p.value();
  auto value = [&](const Natural& n) { return static_cast<Residue>(count_pattern(n, p) % modulus); };
  auto digits_of = [&](const Natural& n) { return expand(n, k).to_string(); };

  RefutationWitness w;
  w.offset = offset;
  w.step = step;
  w.value_at_offset = value(offset);
  w.branch = p.leading() != 0 ? RefutationBranch::LeadingNonzero : RefutationBranch::LeadingZero;

  auto record = [&](std::string name, const Natural& v, std::optional<bool> layout = {}, std::string note = {}) {
    w.trace.push_back(TraceLine{std::move(name), v, digits_of(v), layout, std::move(note)});
  };

  // The low block of every multiple sits above N's digits with M zeros between.
  const std::size_t floor = digit_length(offset, k) + m;
  std::optional<Natural> constructive;
  bool asserted = false;
  bool all_ok = true;

  try {
    const GapWitness gx = find_gap_multiple(GapQuery{step, 3 * m + 1, k, floor, std::nullopt, options.gap_cap});
    const Natural& xl = gx.multiple;
    const std::size_t w1 = gx.lowest_exponent;
    const Natural rxl = r * xl;
    const std::size_t rxl_len = digit_length(rxl, k);
    const GapWitness gbig =
        find_gap_multiple(GapQuery{step, 2 * m + 1 + rxl_len, k, floor, w1, options.gap_cap});
    const Natural& x = gx.x;
    const Natural& big_x = gbig.x;
    const Natural base_w1 = power(k, w1);

    record("x", x);
    record("xl", xl, std::nullopt, "w1=" + std::to_string(w1));
    record("X", big_x);
    record("Xl", gbig.multiple, std::nullopt, "w1=" + std::to_string(gbig.lowest_exponent));

    std::vector<Candidate> candidates;
    auto add = [&](std::string name, Natural multiplier, std::optional<bool> layout, std::string note = {}) {
      candidates.push_back(Candidate{std::move(name), std::move(multiplier), layout, std::move(note)});
    };

    if (w.branch == RefutationBranch::LeadingNonzero) {
      const Natural u = Natural(p.leading()) * power(k, m - 1);
      const Natural wv = r - u;
      const Natural t = Natural(p.leading()) * power(k, m);
      add("Uxl", u * x, low_digits_are(u * xl, u * base_w1, k, w1 + 3 * m + 1));
      add("WXl", wv * big_x, low_digits_are(wv * gbig.multiple, wv * base_w1, k, w1 + 2 * m + 1 + rxl_len));
      add("(Ux+WX)l", u * x + wv * big_x,
          low_digits_are((u * x + wv * big_x) * step, r * base_w1, k, w1 + 3 * m + 1));
      add("Rxl", r * x, low_digits_are(rxl, r * base_w1, k, w1 + 3 * m + 1));
      add("TXl", t * big_x, low_digits_are(t * gbig.multiple, t * base_w1, k, w1 + 2 * m + 2 + rxl_len));
      add("(Rx+TX)l", r * x + t * big_x,
          low_digits_are((r * x + t * big_x) * step, (r + t) * base_w1, k, w1 + 3 * m + 1));
    } else {
      const std::size_t top_letter = digit_length(r, k);  // J
      const std::size_t rxl_top = rxl_len - 1;
      const Natural q = ones(k, top_letter, m) + ones(k, rxl_top + 1 - w1, rxl_top + m + 1 - w1);
      const std::size_t width = rxl_top + m + 1;
      add("Rxl", r * x, low_digits_are(rxl, r * base_w1, k, w1 + 3 * m + 1));
      add("QXl", q * big_x, low_digits_are(q * gbig.multiple, q * base_w1, k, width),
          "Q uses w_x(1) read as w_xl(1)");
      const bool clear = (rxl / power(k, w1 + top_letter)) % power(k, m - top_letter) == 0;
      add("(Rx+QX)l", r * x + q * big_x,
          clear && low_digits_are((r * x + q * big_x) * step, rxl + q * base_w1, k, width));

      const Natural v = power(k, floor);
      const Natural vl = v * step;
      const std::size_t vl_top = digit_length(vl, k) - 1;
      add("Vl", v, std::nullopt);
      if (vl_top + 1 >= w1) {
        const Natural s = ones(k, vl_top + 1 - w1, vl_top + 1 - w1 + m);
        const Natural block = ones(k, vl_top + 1, vl_top + 1 + m);
        add("Sxl", s * x, low_digits_are(s * xl, block, k, vl_top + m + 1));
        add("(V+Sx)l", v + s * x, low_digits_are((v + s * x) * step, vl + block, k, vl_top + m + 1));
      } else {
        record("S", 0, std::nullopt, "skipped: w1 lies above top(Vl)+1");
      }
    }

    for (const auto& c : candidates) {
      std::string note = c.note;
      if (c.multiplier > 0) {
        const Residue v = value(offset + c.multiplier * step);
        note = (note.empty() ? "" : note + "; ") + "n=" + c.multiplier.str() + " e=" + std::to_string(v);
        if (v != w.value_at_offset && !constructive) constructive = c.multiplier;
      }
      if (c.layout) {
        asserted = true;
        all_ok = all_ok && *c.layout;
      }
      record(c.name, c.multiplier * step, c.layout, std::move(note));
    }
  } catch (const CapExceeded& e) {
    record("construction", 0, std::nullopt, std::string("abandoned: ") + e.what());
    all_ok = false;
  }
  w.layout_verified = asserted && all_ok;
  w.constructive_witness = constructive;

  // Least witness, scanned no further than the constructive one.
  const Dfao machine = build_pattern_dfao(p, modulus);
  Natural limit = options.scan_cap;
  if (constructive && *constructive - 1 < limit) limit = *constructive - 1;
  Natural index = offset;
  for (Natural n = 1; n <= limit; ++n) {
    index += step;
    const Residue v = machine.run(index);
    if (v != w.value_at_offset) {
      w.witness = n;
      w.value_at_witness = v;
      w.path = RefutationPath::Scan;
      record("witness", n, std::nullopt, "least witness by scan");
      return w;
    }
  }
  if (constructive) {
    w.witness = *constructive;
    w.value_at_witness = value(offset + *constructive * step);
    w.path = RefutationPath::Constructive;
    record("witness", w.witness, std::nullopt, "constructive witness is least below the scan cap");
    return w;
  }
  throw CapExceeded(options.scan_cap, "no refutation witness found");
}

std::string format_refutation(const RefutationWitness& w) {
  std::ostringstream out;
  out << "N=" << w.offset << " l=" << w.step << " witness=" << w.witness << " vN=" << w.value_at_offset
      << " vW=" << w.value_at_witness;
  return out.str();
}

std::string format_trace_line(const TraceLine& t) {
  std::ostringstream out;
  out << t.name << " value=" << t.value << " digits=" << t.digits;
  if (t.layout_ok) out << " layout=" << (*t.layout_ok ? "ok" : "FAIL");
  if (!t.note.empty()) out << " note=" << t.note;
  return out.str();
}

}  // namespace autoseq
