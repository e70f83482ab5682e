#include "mtlpc/interval.hpp"

#include <stdexcept>

namespace mtlpc {

Interval Interval::make(std::uint64_t lo, std::optional<std::uint64_t> hi, bool lo_closed,
                        bool hi_closed) {
  if (!hi && hi_closed) throw std::invalid_argument("interval: infinite upper end must be open");
  if (hi && lo > *hi) throw std::invalid_argument("interval: lower bound exceeds upper bound");
  if (hi && lo == *hi && !(lo_closed && hi_closed)) {
    throw std::invalid_argument("interval: empty interval");
  }
  Interval out;
  out.lo_ = lo;
  out.hi_ = hi;
  out.lo_closed_ = lo_closed;
  out.hi_closed_ = hi ? hi_closed : false;
  return out;
}

Interval Interval::at_least(std::uint64_t lo, bool lo_closed) {
  return make(lo, std::nullopt, lo_closed, false);
}

std::string Interval::to_string() const {
  if (is_trivial()) return "";
  std::string s = lo_closed_ ? "[" : "(";
  s += std::to_string(lo_);
  s += ",";
  s += hi_ ? std::to_string(*hi_) : "inf";
  s += (hi_ && hi_closed_) ? "]" : ")";
  return s;
}

}  // namespace mtlpc
