#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mtlpc/boolvec.hpp"
#include "mtlpc/interval.hpp"

namespace mtlpc {

using BigInt = boost::multiprecision::cpp_int;

/// An interval rescaled to a trace's tick unit, for exact membership tests on
/// timestamp differences.
class TickInterval {
 public:
  TickInterval(const Interval& interval, const BigInt& unit);

  bool contains(const BigInt& diff) const;
  /// True when every difference >= `diff` lies above the interval.
  bool past_upper(const BigInt& diff) const;
  bool is_trivial() const { return trivial_; }

 private:
  BigInt lo_;
  BigInt hi_;
  bool bounded_;
  bool lo_closed_;
  bool hi_closed_;
  bool trivial_;
};

/// Finite timed trace. Timestamps are exact decimals, stored as integers in a
/// common unit of 10^-scale.
class Trace {
 public:
  using PropositionMap = std::map<std::string, BoolVec>;

  /// `timestamps` are non-negative decimal strings ("3", "8.5").
  Trace(const std::vector<std::string>& timestamps, PropositionMap propositions);

  /// Timestamps 1, 2, ..., n.
  static Trace untimed(std::size_t n, PropositionMap propositions);

  std::size_t size() const { return ticks_.size(); }
  const PropositionMap& propositions() const { return propositions_; }
  bool has(const std::string& name) const { return propositions_.count(name) != 0; }
  /// Throws UnknownPropositionError.
  const BoolVec& prop(const std::string& name) const;

  /// Timestamp of position `pos` (1-indexed) in ticks.
  const BigInt& ticks(std::size_t pos) const { return ticks_[pos - 1]; }
  std::string timestamp_string(std::size_t pos) const;
  std::vector<std::string> timestamp_strings() const;

  TickInterval scale(const Interval& interval) const { return TickInterval(interval, unit_); }
  /// t_to - t_from in I (callers pass from <= to).
  bool difference_in(std::size_t from, std::size_t to, const Interval& interval) const;

  /// Reversed trace with t'_i = t_n - t_{n+1-i}; propositions reversed.
  Trace reversed() const;
  /// First `n` positions only.
  Trace prefix(std::size_t n) const;
  Trace with_proposition(const std::string& name, BoolVec values) const;

 private:
  Trace(std::vector<BigInt> ticks, unsigned scale, PropositionMap propositions);
  void check_invariants() const;

  std::vector<BigInt> ticks_;
  unsigned scale_ = 0;
  BigInt unit_ = 1;
  PropositionMap propositions_;
};

}  // namespace mtlpc
