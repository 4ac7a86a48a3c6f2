#include "nonroot/cardinal_set.hpp"

#include <algorithm>

namespace nonroot {

bool Segment::empty() const {
  if (lo < hi) return false;
  return !(lo == hi && lo_closed && hi_closed);
}

bool Segment::contains(const Rational& x) const {
  if (x < lo || (x == lo && !lo_closed)) return false;
  if (x > hi || (x == hi && !hi_closed)) return false;
  return true;
}

bool Segment::contains(const Segment& o) const {
  if (o.empty()) return true;
  if (o.lo < lo || (o.lo == lo && o.lo_closed && !lo_closed)) return false;
  if (o.hi > hi || (o.hi == hi && o.hi_closed && !hi_closed)) return false;
  return true;
}

std::optional<Segment> intersect(const Segment& a, const Segment& b) {
  Segment s;
  if (a.lo > b.lo) {
    s.lo = a.lo;
    s.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    s.lo = b.lo;
    s.lo_closed = b.lo_closed;
  } else {
    s.lo = a.lo;
    s.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    s.hi = a.hi;
    s.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    s.hi = b.hi;
    s.hi_closed = b.hi_closed;
  } else {
    s.hi = a.hi;
    s.hi_closed = a.hi_closed && b.hi_closed;
  }
  if (s.empty()) return std::nullopt;
  return s;
}

std::string to_string(const Segment& s) {
  if (s.is_point()) return "{" + to_string(s.lo) + "}";
  return std::string(s.lo_closed ? "[" : "(") + to_string(s.lo) + ", " + to_string(s.hi) + (s.hi_closed ? "]" : ")");
}

CardinalSet::CardinalSet(std::vector<Segment> segments) {
  std::erase_if(segments, [](const Segment& s) { return s.empty(); });
  std::sort(segments.begin(), segments.end(), [](const Segment& a, const Segment& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  for (auto& s : segments) {
    if (segments_.empty()) {
      segments_.push_back(std::move(s));
      continue;
    }
    Segment& cur = segments_.back();
    const bool touches = s.lo < cur.hi || (s.lo == cur.hi && (cur.hi_closed || s.lo_closed));
    if (!touches) {
      segments_.push_back(std::move(s));
      continue;
    }
    if (s.hi > cur.hi) {
      cur.hi = s.hi;
      cur.hi_closed = s.hi_closed;
    } else if (s.hi == cur.hi) {
      cur.hi_closed = cur.hi_closed || s.hi_closed;
    }
  }
}

std::vector<Rational> CardinalSet::isolated() const {
  std::vector<Rational> out;
  for (const auto& s : segments_)
    if (s.is_point()) out.push_back(s.lo);
  return out;
}

std::vector<Segment> CardinalSet::intervals() const {
  std::vector<Segment> out;
  for (const auto& s : segments_)
    if (!s.is_point()) out.push_back(s);
  return out;
}

Cardinal CardinalSet::cardinality() const {
  std::uint64_t points = 0;
  for (const auto& s : segments_) {
    if (!s.is_point()) return Cardinal::continuum();
    ++points;
  }
  return Cardinal::finite(points);
}

bool CardinalSet::contains(const Rational& x) const {
  return std::any_of(segments_.begin(), segments_.end(), [&](const Segment& s) { return s.contains(x); });
}

bool CardinalSet::contains(const Segment& seg) const {
  // Normalized segments are separated by gaps, so a connected segment fits in at most one.
  return seg.empty() ||
         std::any_of(segments_.begin(), segments_.end(), [&](const Segment& s) { return s.contains(seg); });
}

bool CardinalSet::intersects(const Segment& seg) const {
  return std::any_of(segments_.begin(), segments_.end(),
                     [&](const Segment& s) { return intersect(s, seg).has_value(); });
}

CardinalSet CardinalSet::unite(const CardinalSet& other) const {
  std::vector<Segment> all = segments_;
  all.insert(all.end(), other.segments_.begin(), other.segments_.end());
  return CardinalSet(std::move(all));
}

std::string to_string(const CardinalSet& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (const auto& seg : s.segments()) {
    if (!out.empty()) out += " U ";
    out += to_string(seg);
  }
  return out;
}

}  // namespace nonroot
