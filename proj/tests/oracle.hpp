#pragma once

// Naive satisfaction checker used as the test oracle. It follows the
// satisfaction clauses position by position with double timestamps (test
// traces use half-unit steps, which doubles represent exactly) and shares no
// code with the engines beyond the formula and trace containers.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mtlpc/formula.hpp"
#include "mtlpc/trace.hpp"

namespace oracle {

class Checker {
 public:
  explicit Checker(const mtlpc::Trace& trace) : trace_(trace), n_(trace.size()) {
    for (std::size_t i = 1; i <= n_; ++i) t_.push_back(std::stod(trace.timestamp_string(i)));
  }

  bool sat(const mtlpc::Formula& f, std::size_t i) {
    const auto key = std::make_pair(f.id(), i);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool v = compute(f, i);
    memo_.emplace(key, v);
    return v;
  }

  std::vector<bool> vector(const mtlpc::Formula& f) {
    std::vector<bool> out;
    for (std::size_t i = 1; i <= n_; ++i) out.push_back(sat(f, i));
    return out;
  }

 private:
  bool in(const mtlpc::Interval& iv, double d) const {
    const double lo = static_cast<double>(iv.lo());
    if (iv.lo_closed() ? d < lo : d <= lo) return false;
    if (!iv.hi()) return true;
    const double hi = static_cast<double>(*iv.hi());
    return iv.hi_closed() ? d <= hi : d < hi;
  }

  bool compute(const mtlpc::Formula& f, std::size_t i) {
    using mtlpc::Op;
    const auto& iv = f.interval();
    switch (f.op()) {
      case Op::True: return true;
      case Op::False: return false;
      case Op::Atom: return trace_.prop(f.name())(i);
      case Op::Not: return !sat(f.lhs(), i);
      case Op::And: return sat(f.lhs(), i) && sat(f.rhs(), i);
      case Op::Or: return sat(f.lhs(), i) || sat(f.rhs(), i);
      case Op::Xor: return sat(f.lhs(), i) != sat(f.rhs(), i);
      case Op::Next: return i + 1 <= n_ && in(iv, t_[i] - t_[i - 1]) && sat(f.lhs(), i + 1);
      case Op::Yesterday: return i > 1 && in(iv, t_[i - 1] - t_[i - 2]) && sat(f.lhs(), i - 1);
      case Op::Until:
        for (std::size_t j = i; j <= n_; ++j) {
          if (!in(iv, t_[j - 1] - t_[i - 1]) || !sat(f.rhs(), j)) continue;
          bool ok = true;
          for (std::size_t k = i; k < j && ok; ++k) ok = sat(f.lhs(), k);
          if (ok) return true;
        }
        return false;
      case Op::Since:
        for (std::size_t j = 1; j <= i; ++j) {
          if (!in(iv, t_[i - 1] - t_[j - 1]) || !sat(f.rhs(), j)) continue;
          bool ok = true;
          for (std::size_t k = j + 1; k <= i && ok; ++k) ok = sat(f.lhs(), k);
          if (ok) return true;
        }
        return false;
      case Op::Release:
        // for every j in the window: b(j) or a(k) for some k in [i, j)
        for (std::size_t j = i; j <= n_; ++j) {
          if (!in(iv, t_[j - 1] - t_[i - 1]) || sat(f.rhs(), j)) continue;
          bool rescued = false;
          for (std::size_t k = i; k < j && !rescued; ++k) rescued = sat(f.lhs(), k);
          if (!rescued) return false;
        }
        return true;
      case Op::Trigger:
        for (std::size_t j = 1; j <= i; ++j) {
          if (!in(iv, t_[i - 1] - t_[j - 1]) || sat(f.rhs(), j)) continue;
          bool rescued = false;
          for (std::size_t k = j + 1; k <= i && !rescued; ++k) rescued = sat(f.lhs(), k);
          if (!rescued) return false;
        }
        return true;
      case Op::Eventually:
        for (std::size_t j = i; j <= n_; ++j) {
          if (in(iv, t_[j - 1] - t_[i - 1]) && sat(f.lhs(), j)) return true;
        }
        return false;
      case Op::Always:
        for (std::size_t j = i; j <= n_; ++j) {
          if (in(iv, t_[j - 1] - t_[i - 1]) && !sat(f.lhs(), j)) return false;
        }
        return true;
      case Op::Once:
        for (std::size_t j = 1; j <= i; ++j) {
          if (in(iv, t_[i - 1] - t_[j - 1]) && sat(f.lhs(), j)) return true;
        }
        return false;
      case Op::Historically:
        for (std::size_t j = 1; j <= i; ++j) {
          if (in(iv, t_[i - 1] - t_[j - 1]) && !sat(f.lhs(), j)) return false;
        }
        return true;
      case Op::Hole: break;
    }
    throw std::logic_error("oracle cannot evaluate a hole");
  }

  const mtlpc::Trace& trace_;
  std::size_t n_;
  std::vector<double> t_;
  std::map<std::pair<const mtlpc::FormulaNode*, std::size_t>, bool> memo_;
};

inline std::vector<bool> vector(const mtlpc::Trace& trace, const mtlpc::Formula& f) {
  return Checker(trace).vector(f);
}

inline std::vector<bool> bits(const mtlpc::BoolVec& v) {
  std::vector<bool> out;
  for (std::size_t i = 1; i <= v.size(); ++i) out.push_back(v(i));
  return out;
}

}  // namespace oracle
