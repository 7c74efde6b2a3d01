#include "autoseq/base_k.hpp"

#include <algorithm>
#include <limits>

#include "autoseq/errors.hpp"

namespace autoseq {

namespace {

void require_base(unsigned base) {
  if (base < 2) throw InvalidArgument("base must be at least 2, got " + std::to_string(base));
}

std::string render_msb_first(std::span<const Digit> msb_first, unsigned base) {
  std::string out;
  for (std::size_t i = 0; i < msb_first.size(); ++i) {
    if (base <= 10) {
      out.push_back(static_cast<char>('0' + msb_first[i]));
    } else {
      if (i != 0) out.push_back(',');
      out += std::to_string(msb_first[i]);
    }
  }
  return out;
}

}  // namespace

Natural power(unsigned base, std::size_t exponent) {
  return boost::multiprecision::pow(Natural(base), static_cast<unsigned>(exponent));
}

DigitExpansion::DigitExpansion(unsigned base, std::vector<Digit> lsb_first)
    : base_(base), digits_(std::move(lsb_first)) {
  require_base(base);
  for (Digit d : digits_) {
    if (d >= base) throw InvalidArgument("digit " + std::to_string(d) + " out of range for base " +
                                         std::to_string(base));
  }
  if (!digits_.empty() && digits_.back() == 0)
    throw InvalidArgument("non-canonical expansion: most significant digit is zero");
}

std::vector<std::size_t> DigitExpansion::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < digits_.size(); ++i)
    if (digits_[i] != 0) out.push_back(i);
  return out;
}

std::string DigitExpansion::to_string() const {
  if (digits_.empty()) return "0";
  std::vector<Digit> msb(digits_.rbegin(), digits_.rend());
  return render_msb_first(msb, base_);
}

DigitExpansion expand(std::uint64_t n, unsigned base) {
  require_base(base);
  std::vector<Digit> digits;
  while (n != 0) {
    digits.push_back(static_cast<Digit>(n % base));
    n /= base;
  }
  return DigitExpansion(base, std::move(digits));
}

DigitExpansion expand(const Natural& n, unsigned base) {
  require_base(base);
  if (n < 0) throw InvalidArgument("cannot expand a negative number");
  if (n <= std::numeric_limits<std::uint64_t>::max()) return expand(static_cast<std::uint64_t>(n), base);

  // Peel off the largest power of k that fits a machine word per division.
  std::uint64_t chunk = base;
  std::size_t per_chunk = 1;
  while (chunk <= std::numeric_limits<std::uint64_t>::max() / base / base) {
    chunk *= base;
    ++per_chunk;
  }
  std::vector<Digit> digits;
  Natural rest = n;
  while (rest != 0) {
    Natural q, r;
    boost::multiprecision::divide_qr(rest, Natural(chunk), q, r);
    auto low = static_cast<std::uint64_t>(r);
    for (std::size_t i = 0; i < per_chunk; ++i) {
      digits.push_back(static_cast<Digit>(low % base));
      low /= base;
    }
    rest = std::move(q);
  }
  while (!digits.empty() && digits.back() == 0) digits.pop_back();
  return DigitExpansion(base, std::move(digits));
}

Natural assemble(const DigitExpansion& d) {
  Natural n = 0;
  auto digits = d.digits();
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    n *= d.base();
    n += *it;
  }
  return n;
}

std::size_t digit_length(const Natural& n, unsigned base) { return expand(n, base).size(); }

Pattern::Pattern(unsigned base, std::vector<Digit> msb_first) : base_(base), word_(std::move(msb_first)) {
  require_base(base);
  if (word_.empty()) throw InvalidArgument("pattern must have at least one digit");
  for (Digit d : word_) {
    if (d >= base) throw InvalidArgument("pattern digit " + std::to_string(d) + " out of range for base " +
                                         std::to_string(base));
  }
  if (std::all_of(word_.begin(), word_.end(), [](Digit d) { return d == 0; }))
    throw InvalidArgument("pattern must not consist only of zeros");
}

Pattern Pattern::parse(std::string_view text, unsigned base) {
  std::vector<Digit> word;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto comma = text.find(',', pos);
      auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      if (piece.empty() || !std::all_of(piece.begin(), piece.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw InvalidArgument("malformed pattern '" + std::string(text) + "'");
      word.push_back(static_cast<Digit>(std::stoul(std::string(piece))));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw InvalidArgument("malformed pattern '" + std::string(text) + "'");
      word.push_back(static_cast<Digit>(c - '0'));
    }
  }
  return Pattern(base, std::move(word));
}

Natural Pattern::value() const {
  Natural r = 0;
  for (Digit d : word_) {
    r *= base_;
    r += d;
  }
  return r;
}

std::string Pattern::to_string() const { return render_msb_first(word_, base_); }

std::size_t count_pattern(const DigitExpansion& n, const Pattern& p) {
  if (n.base() != p.base()) throw InvalidArgument("pattern and number use different bases");
  auto digits = n.digits();
  auto word = p.word();
  const std::size_t m = word.size();
  if (digits.size() < m) return 0;
  std::size_t count = 0;
  // Window starting at exponent i covers exponents i .. i+m-1; word is MSB-first.
  for (std::size_t i = 0; i + m <= digits.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < m && match; ++j) match = digits[i + j] == word[m - 1 - j];
    if (match) ++count;
  }
  return count;
}

std::size_t count_pattern(const Natural& n, const Pattern& p) { return count_pattern(expand(n, p.base()), p); }

std::size_t digit_count(const Natural& n, Digit j, unsigned base) {
  require_base(base);
  if (j == 0 || j >= base)
    throw InvalidArgument("digit_count needs 1 <= j <= k-1, got j=" + std::to_string(j));
  auto d = expand(n, base);
  return static_cast<std::size_t>(std::count(d.digits().begin(), d.digits().end(), j));
}

std::size_t nonzero_digit_count(std::uint64_t n, unsigned base) {
  require_base(base);
  std::size_t count = 0;
  for (; n != 0; n /= base)
    if (n % base != 0) ++count;
  return count;
}

std::size_t nonzero_digit_count(const Natural& n, unsigned base) {
  auto d = expand(n, base);
  return d.size() - static_cast<std::size_t>(std::count(d.digits().begin(), d.digits().end(), Digit{0}));
}

}  // namespace autoseq
