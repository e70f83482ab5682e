#include "mtlpc/trace.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "mtlpc/error.hpp"

namespace mtlpc {

namespace {

struct Decimal {
  BigInt digits;
  unsigned scale;
};

Decimal parse_decimal(const std::string& text) {
  Decimal d{0, 0};
  bool seen_digit = false;
  bool seen_point = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      d.digits = d.digits * 10 + (c - '0');
      if (seen_point) ++d.scale;
      seen_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      throw ParseError("invalid timestamp '" + text + "'", i);
    }
  }
  if (!seen_digit) throw ParseError("invalid timestamp '" + text + "'");
  return d;
}

BigInt pow10(unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

TickInterval::TickInterval(const Interval& interval, const BigInt& unit)
    : lo_(BigInt(interval.lo()) * unit),
      hi_(interval.hi() ? BigInt(*interval.hi()) * unit : BigInt(0)),
      bounded_(interval.hi().has_value()),
      lo_closed_(interval.lo_closed()),
      hi_closed_(interval.hi_closed()),
      trivial_(interval.is_trivial()) {}

bool TickInterval::contains(const BigInt& diff) const {
  if (trivial_) return diff >= 0;
  if (lo_closed_ ? diff < lo_ : diff <= lo_) return false;
  if (!bounded_) return true;
  return hi_closed_ ? diff <= hi_ : diff < hi_;
}

bool TickInterval::past_upper(const BigInt& diff) const {
  if (!bounded_) return false;
  return hi_closed_ ? diff > hi_ : diff >= hi_;
}

Trace::Trace(const std::vector<std::string>& timestamps, PropositionMap propositions)
    : propositions_(std::move(propositions)) {
  std::vector<Decimal> parsed;
  parsed.reserve(timestamps.size());
  for (const auto& t : timestamps) {
    parsed.push_back(parse_decimal(t));
    scale_ = std::max(scale_, parsed.back().scale);
  }
  unit_ = pow10(scale_);
  ticks_.reserve(parsed.size());
  for (const auto& d : parsed) ticks_.push_back(d.digits * pow10(scale_ - d.scale));
  check_invariants();
}

Trace::Trace(std::vector<BigInt> ticks, unsigned scale, PropositionMap propositions)
    : ticks_(std::move(ticks)), scale_(scale), unit_(pow10(scale)),
      propositions_(std::move(propositions)) {
  check_invariants();
}

Trace Trace::untimed(std::size_t n, PropositionMap propositions) {
  std::vector<BigInt> ticks;
  ticks.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) ticks.emplace_back(i);
  return Trace(std::move(ticks), 0, std::move(propositions));
}

void Trace::check_invariants() const {
  if (ticks_.empty()) throw std::invalid_argument("trace must have at least one position");
  for (std::size_t i = 1; i < ticks_.size(); ++i) {
    if (!(ticks_[i - 1] < ticks_[i])) {
      throw std::invalid_argument("timestamps must be strictly increasing (position " +
                                  std::to_string(i + 1) + ")");
    }
  }
  for (const auto& [name, values] : propositions_) {
    if (values.size() != ticks_.size()) {
      throw std::invalid_argument("proposition '" + name + "' has length " +
                                  std::to_string(values.size()) + ", trace has " +
                                  std::to_string(ticks_.size()));
    }
  }
}

const BoolVec& Trace::prop(const std::string& name) const {
  auto it = propositions_.find(name);
  if (it == propositions_.end()) throw UnknownPropositionError(name);
  return it->second;
}

std::string Trace::timestamp_string(std::size_t pos) const {
  std::string digits = ticks(pos).str();
  if (scale_ == 0) return digits;
  if (digits.size() <= scale_) digits.insert(0, scale_ - digits.size() + 1, '0');
  std::string whole = digits.substr(0, digits.size() - scale_);
  std::string frac = digits.substr(digits.size() - scale_);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return frac.empty() ? whole : whole + "." + frac;
}

std::vector<std::string> Trace::timestamp_strings() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (std::size_t i = 1; i <= size(); ++i) out.push_back(timestamp_string(i));
  return out;
}

bool Trace::difference_in(std::size_t from, std::size_t to, const Interval& interval) const {
  return scale(interval).contains(ticks(to) - ticks(from));
}

Trace Trace::reversed() const {
  const std::size_t n = size();
  std::vector<BigInt> rev;
  rev.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) rev.push_back(ticks(n) - ticks(n + 1 - i));
  PropositionMap props;
  for (const auto& [name, values] : propositions_) props.emplace(name, values.reversed());
  return Trace(std::move(rev), scale_, std::move(props));
}

Trace Trace::prefix(std::size_t n) const {
  if (n == 0 || n > size()) throw std::out_of_range("trace prefix length out of range");
  std::vector<BigInt> ticks(ticks_.begin(), ticks_.begin() + static_cast<std::ptrdiff_t>(n));
  PropositionMap props;
  for (const auto& [name, values] : propositions_) {
    BoolVec cut(n);
    for (std::size_t i = 1; i <= n; ++i) cut.set(i, values(i));
    props.emplace(name, std::move(cut));
  }
  return Trace(std::move(ticks), scale_, std::move(props));
}

Trace Trace::with_proposition(const std::string& name, BoolVec values) const {
  PropositionMap props = propositions_;
  props[name] = std::move(values);
  return Trace(ticks_, scale_, std::move(props));
}

}  // namespace mtlpc
