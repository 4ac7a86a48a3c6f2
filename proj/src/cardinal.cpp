#include "nonroot/cardinal.hpp"

#include "nonroot/errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace nonroot {

std::uint64_t Cardinal::count() const {
  if (!is_finite()) throw std::logic_error("count() of an infinite cardinal");
  return count_;
}

Cardinal operator*(const Cardinal& a, const Cardinal& b) {
  if (a.is_finite() && b.is_finite()) {
    unsigned __int128 p = static_cast<unsigned __int128>(a.count_) * b.count_;
    if (p > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("finite cardinal overflow");
    return Cardinal::finite(static_cast<std::uint64_t>(p));
  }
  if (a == Cardinal::finite(0) || b == Cardinal::finite(0)) return Cardinal::finite(0);
  return std::max(a, b);
}

Cardinal operator+(const Cardinal& a, const Cardinal& b) {
  if (a.is_finite() && b.is_finite()) {
    if (a.count_ > std::numeric_limits<std::uint64_t>::max() - b.count_)
      throw std::overflow_error("finite cardinal overflow");
    return Cardinal::finite(a.count_ + b.count_);
  }
  return std::max(a, b);
}

std::string Cardinal::to_string() const {
  switch (kind_) {
    case Kind::finite:
      return std::to_string(count_);
    case Kind::aleph0:
      return "aleph0";
    case Kind::continuum:
      return "continuum";
  }
  return "?";
}

Cardinal Cardinal::parse(const std::string& text) {
  if (text == "aleph0") return aleph0();
  if (text == "continuum") return continuum();
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw InputError("not a cardinal: '" + text + "'");
  return finite(std::stoull(text));
}

}  // namespace nonroot
