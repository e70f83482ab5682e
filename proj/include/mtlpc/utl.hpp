#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "mtlpc/boolvec.hpp"
#include "mtlpc/contraction.hpp"
#include "mtlpc/formula.hpp"
#include "mtlpc/interval.hpp"
#include "mtlpc/trace.hpp"

namespace mtlpc {

using Bits = boost::dynamic_bitset<std::uint64_t>;

Bits to_bits(const BoolVec& v);
BoolVec from_bits(const Bits& b);

enum class Cell : char { Zero, One, Id, Not };

/// f_{v,k}: position i outputs 0, 1, p(i+k) or !p(i+k) according to v(i).
/// Cells whose source i+k lies outside [1, n] are always Zero or One.
class Filter {
 public:
  Filter(std::vector<Cell> pattern, long offset);

  static Filter identity(std::size_t n);
  static Filter negation(std::size_t n);
  /// X (offset +1) and Y (offset -1) without timing constraints.
  static Filter next(std::size_t n);
  static Filter yesterday(std::size_t n);
  static Filter and_const(const BoolVec& s);
  static Filter or_const(const BoolVec& s);
  static Filter xor_const(const BoolVec& s);

  std::size_t size() const { return pattern_.size(); }
  long offset() const { return offset_; }
  const std::vector<Cell>& pattern() const { return pattern_; }
  Cell cell(std::size_t pos) const { return pattern_.at(pos - 1); }

  BoolVec apply(const BoolVec& p) const;
  Bits apply(const Bits& p) const;

  friend bool operator==(const Filter&, const Filter&) = default;

 private:
  std::vector<Cell> pattern_;
  long offset_ = 0;
  // Word masks used by the bitset form of apply.
  Bits ones_;
  Bits pass_;
  Bits negate_;
};

/// outer after inner as one filter with offset k + k'. Throws std::out_of_range
/// when |k + k'| exceeds `bound`.
Filter compose_filters(const Filter& outer, const Filter& inner,
                       std::optional<long> bound = std::nullopt);

enum class TemporalKind { Eventually, Always, Once, Historically };

/// F, G, O or H with an interval that is [0, inf) or lower-bounded and unbounded.
struct TemporalOp {
  TemporalKind kind = TemporalKind::Eventually;
  Interval interval;

  friend bool operator==(const TemporalOp&, const TemporalOp&) = default;
};

/// The op's truth vector on `p`, which is always monotone: F and H give
/// downward vectors, G and O upward ones.
MonotoneVec temporal_to_monotone(const TemporalOp& op, const Trace& trace, const BoolVec& p);
MonotoneVec temporal_to_monotone(const TemporalOp& op, const Trace& trace, const Bits& p);

/// Function with monotone domain: one output row per canonical monotone vector
/// (2n rows, row r for MonotoneVec::from_index(n, r)). Rows are shared and
/// never modified after construction.
class MonDomFn {
 public:
  /// The inclusion m -> expand(m).
  static MonDomFn identity(std::size_t n);
  explicit MonDomFn(std::vector<Bits> rows);

  std::size_t width() const { return n_; }
  std::size_t row_count() const { return rows_->size(); }
  const Bits& row(std::size_t index) const { return (*rows_)[index]; }
  BoolVec at(const MonotoneVec& m) const { return from_bits(row(m.index())); }

  MonDomFn then(const Filter& f) const;
  MonDomFn then(const TemporalOp& op, const Trace& trace) const;

 private:
  std::size_t n_ = 0;
  std::shared_ptr<const std::vector<Bits>> rows_;
};

/// outer . T . inner.
struct Staged {
  Filter inner;
  TemporalOp op;
  MonDomFn outer;
};

/// Either a single filter or a staged function whose first temporal operator
/// (from the input side) is `op`.
class UtlFn {
 public:
  explicit UtlFn(Filter f) : v_(std::move(f)) {}
  explicit UtlFn(Staged s) : v_(std::move(s)) {}

  bool is_filter() const { return std::holds_alternative<Filter>(v_); }
  const Filter& filter() const { return std::get<Filter>(v_); }
  const Staged& staged() const { return std::get<Staged>(v_); }

  BoolVec apply(const BoolVec& x, const Trace& trace) const;

 private:
  std::variant<Filter, Staged> v_;
};

/// op . h for a filter step.
UtlFn compose_utl(const Filter& op, const UtlFn& h, std::optional<long> bound = std::nullopt);
/// T . h for a temporal step.
UtlFn compose_utl(const TemporalOp& op, const UtlFn& h, const Trace& trace);
/// h1 . h2.
UtlFn compose_utl(const UtlFn& h1, const UtlFn& h2, const Trace& trace,
                  std::optional<long> bound = std::nullopt);

struct UtlOptions {
  unsigned workers = 1;
  /// Sees every UtlFn the engine builds or composes. Called from worker
  /// threads when workers > 1.
  std::function<void(const UtlFn&)> observer;
};

/// Truth vector of a UTL or UTL>= formula (negation and xor anywhere) by
/// tree contraction over UtlFn values. Throws FragmentError otherwise.
BoolVec run_utl(const Trace& trace, const Formula& f, const UtlOptions& options = {},
                ContractionStats* stats = nullptr);

}  // namespace mtlpc
