#include "mtlpc/utl.hpp"

#include <iterator>
#include <stdexcept>
#include <string>

#include "mtlpc/error.hpp"

namespace mtlpc {

Bits to_bits(const BoolVec& v) {
  Bits b(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.raw()[i]) b.set(i);
  }
  return b;
}

BoolVec from_bits(const Bits& b) {
  BoolVec v(b.size());
  for (std::size_t i = b.find_first(); i != Bits::npos; i = b.find_next(i)) v.raw()[i] = 1;
  return v;
}

namespace {

Bits monotone_bits(const MonotoneVec& m) {
  Bits b(m.n);
  if (m.breakpoint == 0) return b;
  if (m.direction == Direction::Downward) {
    b.set(0, m.breakpoint, true);
  } else {
    b.set(m.n - m.breakpoint, m.breakpoint, true);
  }
  return b;
}

std::size_t last_set(const Bits& b) {
  std::vector<Bits::block_type> blocks;
  boost::to_block_range(b, std::back_inserter(blocks));
  for (std::size_t k = blocks.size(); k-- > 0;) {
    if (blocks[k] == 0) continue;
    const int top = 63 - __builtin_clzll(blocks[k]);
    return k * Bits::bits_per_block + static_cast<std::size_t>(top);
  }
  return Bits::npos;
}

}  // namespace

Filter::Filter(std::vector<Cell> pattern, long offset)
    : pattern_(std::move(pattern)), offset_(offset) {
  const long n = static_cast<long>(pattern_.size());
  ones_.resize(pattern_.size());
  pass_.resize(pattern_.size());
  negate_.resize(pattern_.size());
  for (long i = 1; i <= n; ++i) {
    const Cell c = pattern_[i - 1];
    const std::size_t bit = static_cast<std::size_t>(i - 1);
    if (c == Cell::One) ones_.set(bit);
    if (c == Cell::Id || c == Cell::Not) {
      if (i + offset_ < 1 || i + offset_ > n) {
        throw std::invalid_argument("filter cell " + std::to_string(i) +
                                    " reads outside the trace");
      }
      pass_.set(bit);
    }
    if (c == Cell::Not) negate_.set(bit);
  }
}

Filter Filter::identity(std::size_t n) { return Filter(std::vector<Cell>(n, Cell::Id), 0); }

Filter Filter::negation(std::size_t n) { return Filter(std::vector<Cell>(n, Cell::Not), 0); }

Filter Filter::next(std::size_t n) {
  std::vector<Cell> v(n, Cell::Id);
  if (n > 0) v.back() = Cell::Zero;
  return Filter(std::move(v), 1);
}

Filter Filter::yesterday(std::size_t n) {
  std::vector<Cell> v(n, Cell::Id);
  if (n > 0) v.front() = Cell::Zero;
  return Filter(std::move(v), -1);
}

Filter Filter::and_const(const BoolVec& s) {
  std::vector<Cell> v;
  for (char b : s.raw()) v.push_back(b ? Cell::Id : Cell::Zero);
  return Filter(std::move(v), 0);
}

Filter Filter::or_const(const BoolVec& s) {
  std::vector<Cell> v;
  for (char b : s.raw()) v.push_back(b ? Cell::One : Cell::Id);
  return Filter(std::move(v), 0);
}

Filter Filter::xor_const(const BoolVec& s) {
  std::vector<Cell> v;
  for (char b : s.raw()) v.push_back(b ? Cell::Not : Cell::Id);
  return Filter(std::move(v), 0);
}

BoolVec Filter::apply(const BoolVec& p) const {
  if (p.size() != size()) throw std::invalid_argument("filter width mismatch");
  BoolVec out(size());
  for (std::size_t i = 1; i <= size(); ++i) {
    switch (pattern_[i - 1]) {
      case Cell::Zero: break;
      case Cell::One: out.set(i, true); break;
      case Cell::Id: out.set(i, p(static_cast<std::size_t>(static_cast<long>(i) + offset_))); break;
      case Cell::Not:
        out.set(i, !p(static_cast<std::size_t>(static_cast<long>(i) + offset_)));
        break;
    }
  }
  return out;
}

Bits Filter::apply(const Bits& p) const {
  if (p.size() != size()) throw std::invalid_argument("filter width mismatch");
  const std::size_t shift = static_cast<std::size_t>(offset_ < 0 ? -offset_ : offset_);
  Bits s = shift >= size() ? Bits(size()) : (offset_ >= 0 ? p >> shift : p << shift);
  s ^= negate_;
  s &= pass_;
  s |= ones_;
  return s;
}

Filter compose_filters(const Filter& outer, const Filter& inner, std::optional<long> bound) {
  if (outer.size() != inner.size()) throw std::invalid_argument("filter width mismatch");
  const long offset = outer.offset() + inner.offset();
  if (bound && (offset > *bound || offset < -*bound)) {
    throw std::out_of_range("composed filter offset " + std::to_string(offset) +
                            " exceeds the bound " + std::to_string(*bound));
  }
  std::vector<Cell> v(outer.size());
  for (std::size_t i = 1; i <= outer.size(); ++i) {
    const Cell c = outer.cell(i);
    if (c == Cell::Zero || c == Cell::One) {
      v[i - 1] = c;
      continue;
    }
    const Cell src = inner.cell(static_cast<std::size_t>(static_cast<long>(i) + outer.offset()));
    if (c == Cell::Id) {
      v[i - 1] = src;
    } else {
      switch (src) {
        case Cell::Zero: v[i - 1] = Cell::One; break;
        case Cell::One: v[i - 1] = Cell::Zero; break;
        case Cell::Id: v[i - 1] = Cell::Not; break;
        case Cell::Not: v[i - 1] = Cell::Id; break;
      }
    }
  }
  // Cells that read nothing may sit anywhere; the constructor re-checks the rest.
  return Filter(std::move(v), offset);
}

MonotoneVec temporal_to_monotone(const TemporalOp& op, const Trace& trace, const BoolVec& p) {
  return temporal_to_monotone(op, trace, to_bits(p));
}

MonotoneVec temporal_to_monotone(const TemporalOp& op, const Trace& trace, const Bits& p) {
  const std::size_t n = trace.size();
  if (p.size() != n) throw std::invalid_argument("vector length differs from trace");
  if (!op.interval.is_unbounded()) {
    throw std::invalid_argument("monotone temporal operators need an unbounded interval");
  }
  const TickInterval in = trace.scale(op.interval);

  // Positions i <= j (0-based) with t_j - t_i in I form a prefix [0, count).
  auto prefix_before = [&](std::size_t j) -> std::size_t {
    if (in.is_trivial()) return j + 1;
    std::size_t lo = 0;
    std::size_t hi = j + 1;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (in.contains(trace.ticks(j + 1) - trace.ticks(mid + 1))) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo;
  };
  // Positions i >= j with t_i - t_j in I form a suffix of length count.
  auto suffix_after = [&](std::size_t j) -> std::size_t {
    if (in.is_trivial()) return n - j;
    std::size_t lo = j;
    std::size_t hi = n;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (in.contains(trace.ticks(mid + 1) - trace.ticks(j + 1))) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return n - lo;
  };

  switch (op.kind) {
    case TemporalKind::Eventually: {
      // Only the last witness matters: a later j has a larger time distance.
      const std::size_t j = last_set(p);
      return MonotoneVec::downward(n, j == Bits::npos ? 0 : prefix_before(j));
    }
    case TemporalKind::Always: {
      const std::size_t j = last_set(~p);
      if (j == Bits::npos) return MonotoneVec::downward(n, n);
      return MonotoneVec::upward(n, n - prefix_before(j));
    }
    case TemporalKind::Once: {
      const std::size_t j = p.find_first();
      return MonotoneVec::upward(n, j == Bits::npos ? 0 : suffix_after(j));
    }
    case TemporalKind::Historically: {
      const std::size_t j = (~p).find_first();
      if (j == Bits::npos) return MonotoneVec::downward(n, n);
      return MonotoneVec::downward(n, n - suffix_after(j));
    }
  }
  throw std::logic_error("unhandled temporal operator");
}

MonDomFn::MonDomFn(std::vector<Bits> rows) {
  n_ = rows.size() / 2;
  if (rows.size() != 2 * n_) throw std::invalid_argument("a monotone-domain table has 2n rows");
  for (const Bits& r : rows) {
    if (r.size() != n_) throw std::invalid_argument("table row width differs from n");
  }
  rows_ = std::make_shared<const std::vector<Bits>>(std::move(rows));
}

MonDomFn MonDomFn::identity(std::size_t n) {
  std::vector<Bits> rows;
  rows.reserve(2 * n);
  for (std::size_t r = 0; r < 2 * n; ++r) rows.push_back(monotone_bits(MonotoneVec::from_index(n, r)));
  return MonDomFn(std::move(rows));
}

MonDomFn MonDomFn::then(const Filter& f) const {
  std::vector<Bits> rows;
  rows.reserve(row_count());
  for (const Bits& r : *rows_) rows.push_back(f.apply(r));
  return MonDomFn(std::move(rows));
}

MonDomFn MonDomFn::then(const TemporalOp& op, const Trace& trace) const {
  std::vector<Bits> rows;
  rows.reserve(row_count());
  for (const Bits& r : *rows_) rows.push_back(monotone_bits(temporal_to_monotone(op, trace, r)));
  return MonDomFn(std::move(rows));
}

BoolVec UtlFn::apply(const BoolVec& x, const Trace& trace) const {
  if (is_filter()) return filter().apply(x);
  const Staged& s = staged();
  return s.outer.at(temporal_to_monotone(s.op, trace, s.inner.apply(to_bits(x))));
}

UtlFn compose_utl(const Filter& op, const UtlFn& h, std::optional<long> bound) {
  if (h.is_filter()) return UtlFn(compose_filters(op, h.filter(), bound));
  const Staged& s = h.staged();
  return UtlFn(Staged{s.inner, s.op, s.outer.then(op)});
}

UtlFn compose_utl(const TemporalOp& op, const UtlFn& h, const Trace& trace) {
  if (h.is_filter()) return UtlFn(Staged{h.filter(), op, MonDomFn::identity(trace.size())});
  const Staged& s = h.staged();
  return UtlFn(Staged{s.inner, s.op, s.outer.then(op, trace)});
}

UtlFn compose_utl(const UtlFn& h1, const UtlFn& h2, const Trace& trace, std::optional<long> bound) {
  if (h1.is_filter()) return compose_utl(h1.filter(), h2, bound);
  const Staged& a = h1.staged();
  if (h2.is_filter()) {
    return UtlFn(Staged{compose_filters(a.inner, h2.filter(), bound), a.op, a.outer});
  }
  const Staged& b = h2.staged();
  std::vector<Bits> rows;
  rows.reserve(b.outer.row_count());
  for (std::size_t r = 0; r < b.outer.row_count(); ++r) {
    const MonotoneVec m = temporal_to_monotone(a.op, trace, a.inner.apply(b.outer.row(r)));
    rows.push_back(a.outer.row(m.index()));
  }
  return UtlFn(Staged{b.inner, b.op, MonDomFn(std::move(rows))});
}

namespace {

TemporalKind temporal_kind(NodeOp op) {
  switch (op) {
    case NodeOp::Eventually: return TemporalKind::Eventually;
    case NodeOp::Always: return TemporalKind::Always;
    case NodeOp::Once: return TemporalKind::Once;
    case NodeOp::Historically: return TemporalKind::Historically;
    default: break;
  }
  throw FragmentError(std::string("operator ") + to_string(op) + " is outside UTL");
}

class UtlPolicy {
 public:
  using Function = UtlFn;

  UtlPolicy(const Trace& trace, long bound, const UtlOptions& options)
      : trace_(trace), bound_(bound), options_(options) {}

  Function partial(const TreeNode& p, bool, const BoolVec& c) const {
    switch (p.op) {
      case NodeOp::And: return seen(UtlFn(Filter::and_const(c)));
      case NodeOp::Or: return seen(UtlFn(Filter::or_const(c)));
      case NodeOp::Xor: return seen(UtlFn(Filter::xor_const(c)));
      default: break;
    }
    throw FragmentError(std::string("operator ") + to_string(p.op) + " is outside UTL");
  }

  Function unary(const TreeNode& u) const {
    const std::size_t n = trace_.size();
    switch (u.op) {
      case NodeOp::Not: return seen(UtlFn(Filter::negation(n)));
      case NodeOp::Next:
      case NodeOp::Yesterday:
        if (!u.interval.is_trivial()) throw FragmentError("timed X/Y are outside UTL");
        return seen(UtlFn(u.op == NodeOp::Next ? Filter::next(n) : Filter::yesterday(n)));
      default: break;
    }
    const TemporalOp op{temporal_kind(u.op), u.interval};
    return seen(compose_utl(op, UtlFn(Filter::identity(n)), trace_));
  }

  Function compose(const Function& outer, const Function& inner) const {
    return seen(compose_utl(outer, inner, trace_, bound_));
  }

  BoolVec apply(const Function& f, const BoolVec& x) const { return f.apply(x, trace_); }

 private:
  Function seen(Function f) const {
    if (options_.observer) options_.observer(f);
    return f;
  }

  const Trace& trace_;
  long bound_;
  const UtlOptions& options_;
};

}  // namespace

BoolVec run_utl(const Trace& trace, const Formula& f, const UtlOptions& options,
                ContractionStats* stats) {
  const Fragment fragment = classify_fragment(f);
  if (!is_unary_fragment(fragment)) {
    throw FragmentError("formula is in " + to_string(fragment) + ", not UTL or UTL>=");
  }
  const ContractionTree tree = build_tree(trace, f, false);
  const Schedule schedule = schedule_rounds(tree);
  if (stats) {
    stats->leaves = tree.leaf_count();
    stats->rounds = schedule.rounds.size();
  }
  const UtlPolicy policy(trace, static_cast<long>(f.size()), options);
  return contract(tree, schedule, policy, options.workers);
}

}  // namespace mtlpc
