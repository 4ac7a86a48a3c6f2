#pragma once

#include "nonroot/cardinal_set.hpp"
#include "nonroot/certifier.hpp"
#include "nonroot/comparable_real.hpp"
#include "nonroot/rational.hpp"

#include <compare>
#include <vector>

namespace nonroot {

/// The point e^{2 pi i t} of S^1, stored as t in [0,1).
class Angle {
 public:
  Angle() = default;
  /// Reduces t modulo 1.
  explicit Angle(const Rational& t) : t_(frac(t)) {}

  const Rational& turns() const noexcept { return t_; }

  friend bool operator==(const Angle&, const Angle&) = default;
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b) { return cmp(a.t_, b.t_) <=> 0; }

 private:
  Rational t_;
};

std::string to_string(const Angle& a);

/// Counterclockwise travel from `from` to `to`, in [0,1).
Rational ccw_distance(const Angle& from, const Angle& to);

/// Shorter of the two ways round, in [0, 1/2].
Rational angular_distance(const Angle& a, const Angle& b);

/// True iff z1 = z0 e^{2 pi i t1}, z2 = z0 e^{2 pi i t2} with 0 < t1 < t2 < 1.
/// Throws std::invalid_argument unless the three points are distinct.
bool cyclic_order(const Angle& z0, const Angle& z1, const Angle& z2);

/// Arc traversed counterclockwise from start to end; start != end.
class Arc {
 public:
  /// Throws std::invalid_argument if start == end.
  Arc(Angle start, Angle end);

  const Angle& start() const noexcept { return start_; }
  const Angle& end() const noexcept { return end_; }
  Rational length() const { return ccw_distance(start_, end_); }

  bool contains(const Angle& z) const;       // closed arc
  bool contains_open(const Angle& z) const;  // interior
  /// Point at fraction alpha in [0,1] of the way from start to end.
  Angle at(const Rational& alpha) const { return Angle(start_.turns() + alpha * length()); }

  friend bool operator==(const Arc&, const Arc&) = default;

 private:
  Angle start_;
  Angle end_;
};

std::string to_string(const Arc& a);

/// The arc as a subset of [0,1), split at 0 when it wraps.
CardinalSet arc_set(const Arc& a, bool closed = true);

/// Maps a lifted segment of length at most 1 onto [0,1), splitting at 0.
CardinalSet wrap_segment(const Segment& lifted);

/// Interior of a subset of the circle (wrap-around at 0 taken into account).
CardinalSet circle_interior(const CardinalSet& s);

/// Closed arc contained in s.
bool contains_arc(const CardinalSet& s, const Arc& a);

/// The arc of length < 1/2 joining w1 and w2. Throws AdmissibilityError when
/// the points coincide or are antipodal.
Arc minor_arc(const Angle& w1, const Angle& w2);

/// Signed travel along the minor arc from `from` to `to`, in (-1/2, 1/2).
/// Zero when the points coincide. Throws AdmissibilityError when antipodal.
Rational minor_displacement(const Angle& from, const Angle& to);

enum class Orientation { preserve, reverse };

/// Affine map of an arc J = [z1, z2] onto [w1, w2] (preserve: counterclockwise
/// from w1 to w2) or onto [w2, w1] (reverse: clockwise from w1 to w2), with
/// the point at fraction alpha of J sent to the point at fraction alpha of
/// the image path.
class ArcAffineMap {
 public:
  ArcAffineMap(Arc domain, Angle s1, Angle s2, Orientation orientation);

  const Arc& domain() const noexcept { return domain_; }
  /// Lifted image travel; positive for preserve, negative for reverse.
  const Rational& displacement() const noexcept { return displacement_; }

  Angle at_alpha(const Rational& alpha) const;
  /// Throws std::out_of_range if z is not on the domain arc.
  Angle operator()(const Angle& z) const;

 private:
  Arc domain_;
  Angle s1_;
  Rational displacement_;
};

ArcAffineMap affine_on_arc(const Arc& domain, const Angle& s1, const Angle& s2, Orientation orientation);

/// Cyclically sorted distinct points z_0 < ... < z_{k-1} of [0,1), k >= 2.
class CirclePartition {
 public:
  /// Sorts the points; throws InputError on duplicates or fewer than 2 points.
  explicit CirclePartition(std::vector<Angle> points);

  std::size_t size() const noexcept { return points_.size(); }
  const Angle& point(std::size_t j) const { return points_[j]; }
  const std::vector<Angle>& points() const noexcept { return points_; }
  /// [z_j, z_{j+1}] with z_k = z_0.
  Arc arc(std::size_t j) const { return Arc(points_[j], points_[(j + 1) % points_.size()]); }
  Rational arc_length(std::size_t j) const { return arc(j).length(); }
  /// j such that z lies in [z_j, z_{j+1}); partition points own their outgoing arc.
  std::size_t locate(const Angle& z) const;
  bool has_point(const Angle& z) const;

  CirclePartition refined(const std::vector<Angle>& extra) const;

  friend bool operator==(const CirclePartition&, const CirclePartition&) = default;

 private:
  std::vector<Angle> points_;
};

/// Piecewise-affine circle map supported on a partition: arc [z_j, z_{j+1}]
/// goes affinely onto the minor arc joining w_j and w_{j+1}. Equal
/// consecutive images are allowed and give a constant arc; antipodal
/// consecutive images are rejected. Such maps are continuous.
class AdmissibleCircleMap {
 public:
  /// Throws AdmissibilityError on an antipodal image pair, InputError when
  /// the image count differs from the partition size.
  AdmissibleCircleMap(CirclePartition partition, std::vector<Angle> images);

  static AdmissibleCircleMap rotation(const Rational& turns, std::size_t k = 3);
  static AdmissibleCircleMap identity(std::size_t k = 3) { return rotation(0, k); }

  const CirclePartition& partition() const noexcept { return partition_; }
  const std::vector<Angle>& images() const noexcept { return images_; }
  /// Signed travel of the image of arc j, in (-1/2, 1/2).
  const Rational& displacement(std::size_t j) const { return displacement_[j]; }
  /// Angular speed on arc j.
  Rational slope(std::size_t j) const { return Rational(displacement_[j] / partition_.arc_length(j)); }
  bool is_constant_arc(std::size_t j) const { return displacement_[j] == 0; }
  std::vector<std::size_t> constant_arcs() const;
  ArcAffineMap arc_map(std::size_t j) const;
  /// Largest |slope| over all arcs.
  Rational max_slope() const;

  friend bool operator==(const AdmissibleCircleMap&, const AdmissibleCircleMap&) = default;

 private:
  CirclePartition partition_;
  std::vector<Angle> images_;
  std::vector<Rational> displacement_;
};

Angle eval(const AdmissibleCircleMap& f, const Angle& z);

CardinalSet preimage_set(const AdmissibleCircleMap& f, const CardinalSet& target);
CardinalSet preimage_circle(const AdmissibleCircleMap& f, const Angle& y);

/// f(a) for a closed arc lying inside one closed partition arc. Throws
/// std::invalid_argument otherwise.
CardinalSet image_of_arc(const AdmissibleCircleMap& f, const Arc& a);

/// Union of the image arcs of all partition arcs.
CardinalSet range_set(const AdmissibleCircleMap& f);

/// Exact sup over y != x0 of #f^-1(y) by a sweep over image arcs.
Cardinal max_other_fiber(const AdmissibleCircleMap& f, const Angle& x0);

FiberProfile fiber_profile(const AdmissibleCircleMap& f, const Angle& x0);

/// Values of constant arcs, their images, then images of partition points.
std::vector<Angle> candidate_points(const AdmissibleCircleMap& f);

CertifyOutcome certify_circle(const AdmissibleCircleMap& f);

/// |e^{2 pi i t} - e^{2 pi i s}| = 2 sin(pi d), d the angular distance.
ComparableReal chordal_distance(const Angle& z, const Angle& w);

/// sup over S^1 of chordal_distance(f(z), h(z)).
///
/// On each arc of the common refinement the lifted difference of f and h is
/// affine, so the angular distance peaks at an endpoint or where the
/// difference crosses a half-integer (where the chord is 2).
ComparableReal sup_distance_circle(const AdmissibleCircleMap& f, const AdmissibleCircleMap& h);

}  // namespace nonroot
