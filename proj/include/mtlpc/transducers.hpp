#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mtlpc/boolvec.hpp"
#include "mtlpc/circuit.hpp"
#include "mtlpc/interval.hpp"
#include "mtlpc/trace.hpp"

namespace mtlpc {

/// Per-position data behind the Until circuits, for a fixed s and I.
struct WindowEntry {
  std::optional<std::size_t> first;  ///< min T_i, T_i = {j : t_j in t_i + I}
  std::optional<std::size_t> last;   ///< max T_i
  std::size_t seg = 0;               ///< first j >= i with s(j) false, n+1 if none
  std::optional<std::size_t> limit;  ///< first j in T_i with s(j) true
};

class Window {
 public:
  explicit Window(std::vector<WindowEntry> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  const WindowEntry& at(std::size_t pos) const { return entries_.at(pos - 1); }
  bool empty_at(std::size_t pos) const { return !at(pos).first.has_value(); }
  /// [L_i, R_i] with L_i = first(i) and R_i = min(last(i), seg(i)), or nullopt
  /// when T_i is empty or L_i > R_i.
  std::optional<std::pair<std::size_t, std::size_t>> span(std::size_t pos) const;

 private:
  std::vector<WindowEntry> entries_;
};

Window compute_window(const Trace& trace, const Interval& interval, const BoolVec& s);

/// x -> s U_I x. OR lattice d_{p,q} over the spans [L_i, R_i].
TransducerCircuit build_until_left(const BoolVec& s, const Interval& interval, const Trace& trace);
/// x -> x U_I s. AND lattice c_{p,q} over [i, limit(i) - 1].
TransducerCircuit build_until_right(const BoolVec& s, const Interval& interval,
                                    const Trace& trace);

enum class DualOp { ReleaseLeft, ReleaseRight, SinceLeft, SinceRight, TriggerLeft, TriggerRight };

/// "Left" fixes the left operand to s (x -> s OP x); "Right" fixes the right
/// operand (x -> x OP s).
TransducerCircuit build_dual(DualOp op, const BoolVec& s, const Interval& interval,
                             const Trace& trace);

enum class PointwiseOp { AndConst, OrConst, XorConst, Next, Yesterday, WeakNext, WeakYesterday };

/// Single-layer positionwise circuits. The Boolean ops need `s`. WeakNext is
/// the dual of Next: true at positions where Next's guard fails.
TransducerCircuit build_pointwise(PointwiseOp op, const std::optional<BoolVec>& s,
                                  const Interval& interval, const Trace& trace);

enum class UnaryTemporal { Eventually, Always, Once, Historically };

/// F_I = true U_I x, G_I = false R_I x, O_I = true S_I x, H_I = false T_I x.
TransducerCircuit build_unary(UnaryTemporal op, const Interval& interval, const Trace& trace);

}  // namespace mtlpc
