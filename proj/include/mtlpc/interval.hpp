#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace mtlpc {

/// Non-empty interval with natural-number endpoints; `hi == nullopt` is infinity.
/// Default-constructed value is [0, inf).
class Interval {
 public:
  Interval() = default;

  /// Throws std::invalid_argument for lo > hi, a closed infinite end, or an
  /// empty interval such as (3,3].
  static Interval make(std::uint64_t lo, std::optional<std::uint64_t> hi, bool lo_closed = true,
                       bool hi_closed = true);
  static Interval at_least(std::uint64_t lo, bool lo_closed = true);

  std::uint64_t lo() const { return lo_; }
  const std::optional<std::uint64_t>& hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }

  bool is_unbounded() const { return !hi_.has_value(); }
  /// True for [0, inf), the untimed interval.
  bool is_trivial() const { return lo_ == 0 && lo_closed_ && !hi_; }

  /// Suffix used by the formula printer: "" for [0,inf), else e.g. "[1,5)".
  std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  std::uint64_t lo_ = 0;
  std::optional<std::uint64_t> hi_;
  bool lo_closed_ = true;
  bool hi_closed_ = false;
};

}  // namespace mtlpc
