#include "mtlpc/boolvec.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "mtlpc/error.hpp"

namespace mtlpc {

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error(position == std::string::npos ? message
                                          : message + " at position " + std::to_string(position)),
      position_(position) {}

UnknownPropositionError::UnknownPropositionError(const std::string& name)
    : Error("unknown proposition '" + name + "'"), name_(name) {}

BoolVec BoolVec::from_string(std::string_view bits) {
  BoolVec v;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    char c = bits[i];
    if (c == '0' || c == '1') {
      v.bits_.push_back(c == '1' ? 1 : 0);
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw ParseError("expected '0' or '1' in bit string", i);
    }
  }
  return v;
}

BoolVec BoolVec::from_bits(const std::vector<int>& bits) {
  BoolVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1) throw ParseError("truth values must be 0 or 1");
    v.bits_[i] = static_cast<char>(bits[i]);
  }
  return v;
}

namespace {

void require_same_size(const BoolVec& a, const BoolVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("BoolVec length mismatch");
}

}  // namespace

BoolVec BoolVec::operator~() const {
  BoolVec out(size());
  for (std::size_t i = 0; i < size(); ++i) out.bits_[i] = bits_[i] ? 0 : 1;
  return out;
}

BoolVec BoolVec::operator&(const BoolVec& other) const {
  require_same_size(*this, other);
  BoolVec out(size());
  for (std::size_t i = 0; i < size(); ++i) out.bits_[i] = bits_[i] & other.bits_[i];
  return out;
}

BoolVec BoolVec::operator|(const BoolVec& other) const {
  require_same_size(*this, other);
  BoolVec out(size());
  for (std::size_t i = 0; i < size(); ++i) out.bits_[i] = bits_[i] | other.bits_[i];
  return out;
}

BoolVec BoolVec::operator^(const BoolVec& other) const {
  require_same_size(*this, other);
  BoolVec out(size());
  for (std::size_t i = 0; i < size(); ++i) out.bits_[i] = bits_[i] ^ other.bits_[i];
  return out;
}

BoolVec BoolVec::reversed() const {
  BoolVec out = *this;
  std::reverse(out.bits_.begin(), out.bits_.end());
  return out;
}

bool BoolVec::all() const {
  return std::all_of(bits_.begin(), bits_.end(), [](char b) { return b != 0; });
}

bool BoolVec::none() const {
  return std::none_of(bits_.begin(), bits_.end(), [](char b) { return b != 0; });
}

std::size_t BoolVec::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::string BoolVec::to_string() const {
  std::string s(size(), '0');
  for (std::size_t i = 0; i < size(); ++i) s[i] = bits_[i] ? '1' : '0';
  return s;
}

BoolVec chi(std::size_t i, std::size_t j, std::size_t n) {
  if (i < 1 || i > j || j > n) {
    throw std::out_of_range("chi(" + std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(n) + "): need 1 <= i <= j <= n");
  }
  BoolVec v(n);
  for (std::size_t k = i; k <= j; ++k) v.set(k, true);
  return v;
}

MonotoneVec MonotoneVec::downward(std::size_t n, std::size_t k) {
  if (k > n) throw std::out_of_range("monotone breakpoint exceeds length");
  return MonotoneVec{n, Direction::Downward, k};
}

MonotoneVec MonotoneVec::upward(std::size_t n, std::size_t k) {
  if (k > n) throw std::out_of_range("monotone breakpoint exceeds length");
  if (k == 0 || k == n) return downward(n, k);
  return MonotoneVec{n, Direction::Upward, k};
}

MonotoneVec MonotoneVec::from_index(std::size_t n, std::size_t index) {
  if (index <= n) return downward(n, index);
  if (index < 2 * n) return upward(n, index - n);
  throw std::out_of_range("monotone index out of range");
}

std::size_t MonotoneVec::index() const {
  return direction == Direction::Downward ? breakpoint : n + breakpoint;
}

BoolVec MonotoneVec::expand() const {
  BoolVec v(n);
  if (direction == Direction::Downward) {
    for (std::size_t i = 1; i <= breakpoint; ++i) v.set(i, true);
  } else {
    for (std::size_t i = n - breakpoint + 1; i <= n; ++i) v.set(i, true);
  }
  return v;
}

bool MonotoneVec::is_canonical() const {
  if (breakpoint > n) return false;
  if (direction == Direction::Upward) return breakpoint != 0 && breakpoint != n;
  return true;
}

std::optional<MonotoneVec> to_monotone(const BoolVec& v) {
  const std::size_t n = v.size();
  std::size_t prefix = 0;
  while (prefix < n && v(prefix + 1)) ++prefix;
  bool rest_false = true;
  for (std::size_t i = prefix + 1; i <= n; ++i) rest_false = rest_false && !v(i);
  if (rest_false) return MonotoneVec::downward(n, prefix);

  std::size_t suffix = 0;
  while (suffix < n && v(n - suffix)) ++suffix;
  for (std::size_t i = 1; i + suffix <= n; ++i) {
    if (v(i)) return std::nullopt;
  }
  return MonotoneVec::upward(n, suffix);
}

}  // namespace mtlpc
