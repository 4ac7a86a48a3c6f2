#pragma once

#include "nonroot/cardinal.hpp"
#include "nonroot/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nonroot {

/// A rational interval with explicit endpoint flags. lo == hi with both ends
/// closed is a single point; anything else with lo >= hi is empty.
struct Segment {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  static Segment point(const Rational& x) { return {x, x, true, true}; }
  static Segment closed(const Rational& lo, const Rational& hi) { return {lo, hi, true, true}; }
  static Segment open(const Rational& lo, const Rational& hi) { return {lo, hi, false, false}; }

  bool empty() const;
  bool is_point() const { return lo == hi && lo_closed && hi_closed; }
  bool contains(const Rational& x) const;
  /// Every point of other lies in this segment.
  bool contains(const Segment& other) const;

  friend bool operator==(const Segment&, const Segment&) = default;
};

std::optional<Segment> intersect(const Segment& a, const Segment& b);

/// "[1/4, 1/2)" style text.
std::string to_string(const Segment& s);

/// Finite union of rational points and intervals, kept normalized: segments
/// sorted, pairwise disjoint and non-adjacent, so equality is structural.
class CardinalSet {
 public:
  CardinalSet() = default;
  explicit CardinalSet(std::vector<Segment> segments);

  static CardinalSet point(const Rational& x) { return CardinalSet({Segment::point(x)}); }

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  std::vector<Rational> isolated() const;
  std::vector<Segment> intervals() const;

  /// Finite(#isolated) without intervals, Continuum otherwise.
  Cardinal cardinality() const;

  bool empty() const noexcept { return segments_.empty(); }
  bool contains(const Rational& x) const;
  bool contains(const Segment& s) const;
  bool intersects(const Segment& s) const;

  CardinalSet unite(const CardinalSet& other) const;

  friend bool operator==(const CardinalSet&, const CardinalSet&) = default;

 private:
  std::vector<Segment> segments_;
};

std::string to_string(const CardinalSet& s);

}  // namespace nonroot
