#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mtlpc {

/// Fixed-length truth vector over trace positions. Positions are 1-indexed:
/// `v(1)` is the first entry. `raw()` exposes the 0-indexed storage.
class BoolVec {
 public:
  BoolVec() = default;
  explicit BoolVec(std::size_t n, bool value = false) : bits_(n, value ? 1 : 0) {}

  /// Parses a string of '0'/'1' characters (whitespace ignored).
  static BoolVec from_string(std::string_view bits);
  static BoolVec from_bits(const std::vector<int>& bits);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  bool operator()(std::size_t pos) const { return bits_[pos - 1] != 0; }
  void set(std::size_t pos, bool value) { bits_[pos - 1] = value ? 1 : 0; }

  const std::vector<char>& raw() const { return bits_; }
  std::vector<char>& raw() { return bits_; }

  BoolVec operator~() const;
  BoolVec operator&(const BoolVec& other) const;
  BoolVec operator|(const BoolVec& other) const;
  BoolVec operator^(const BoolVec& other) const;

  BoolVec reversed() const;
  bool all() const;
  bool none() const;
  std::size_t count() const;

  std::string to_string() const;

  friend bool operator==(const BoolVec&, const BoolVec&) = default;

 private:
  std::vector<char> bits_;
};

/// chi(i, j, n): true exactly on positions i..j.
BoolVec chi(std::size_t i, std::size_t j, std::size_t n);

enum class Direction { Downward, Upward };

/// Canonical monotone vector. Downward with breakpoint k has positions 1..k
/// true; upward with breakpoint k has positions n-k+1..n true. The all-true
/// and all-false vectors are always stored as downward (k = n and k = 0), so
/// there are exactly 2n canonical values, indexed 0..2n-1 by `index()`.
struct MonotoneVec {
  std::size_t n = 0;
  Direction direction = Direction::Downward;
  std::size_t breakpoint = 0;

  static MonotoneVec downward(std::size_t n, std::size_t k);
  static MonotoneVec upward(std::size_t n, std::size_t k);
  static MonotoneVec from_index(std::size_t n, std::size_t index);

  std::size_t index() const;
  BoolVec expand() const;
  bool is_canonical() const;

  friend bool operator==(const MonotoneVec&, const MonotoneVec&) = default;
};

/// Canonical representative of `v`, or nullopt when `v` is not monotone.
std::optional<MonotoneVec> to_monotone(const BoolVec& v);

}  // namespace mtlpc
