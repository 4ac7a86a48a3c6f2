#pragma once

#include "nonroot/cardinal_set.hpp"
#include "nonroot/certifier.hpp"
#include "nonroot/rational.hpp"

#include <vector>

namespace nonroot {

/// x |-> slope * x + intercept on a domain segment.
struct Piece {
  Segment domain;
  Rational slope;
  Rational intercept;

  Rational at(const Rational& x) const { return Rational(slope * x + intercept); }
  bool is_constant() const { return slope == 0; }
  /// Image of the domain (a point for constant pieces).
  Segment image() const;
  /// {x in domain : at(x) in target}.
  std::optional<Segment> preimage(const Segment& target) const;

  friend bool operator==(const Piece&, const Piece&) = default;
};

/// Piecewise-affine self-map of [0,1], possibly discontinuous.
///
/// Pieces partition [0,1]: each x lies in exactly one piece. The constructor
/// accepts the common textbook form where neighbouring closed pieces share an
/// endpoint, provided both formulas agree there; the later piece is then
/// opened at that endpoint. Stored pieces are normalized: neighbours with the
/// same formula are merged, and point pieces are absorbed when a neighbour's
/// formula already gives the same value.
class PLMapInterval {
 public:
  /// Throws InputError if the pieces do not partition [0,1] or the range
  /// leaves [0,1].
  explicit PLMapInterval(std::vector<Piece> pieces);

  static PLMapInterval identity();
  static PLMapInterval constant(const Rational& value);

  const std::vector<Piece>& pieces() const noexcept { return pieces_; }
  /// Index of the piece containing x.
  std::size_t locate(const Rational& x) const;
  bool is_continuous() const;

  friend bool operator==(const PLMapInterval&, const PLMapInterval&) = default;

 private:
  std::vector<Piece> pieces_;
};

/// Throws std::out_of_range for x outside [0,1].
Rational eval(const PLMapInterval& f, const Rational& x);

/// outer o inner, with pieces refined so every output piece is affine.
PLMapInterval compose(const PLMapInterval& outer, const PLMapInterval& inner);

CardinalSet preimage_set(const PLMapInterval& f, const CardinalSet& target);
CardinalSet preimage_point(const PLMapInterval& f, const Rational& y);
CardinalSet preimage2_point(const PLMapInterval& f, const Rational& y);

/// Exact sup over x != x0 of #f^-1(x): Continuum if a constant piece with a
/// nondegenerate domain takes a value other than x0, otherwise the largest
/// finite fiber, found by sampling every critical value and every gap between
/// consecutive critical values.
Cardinal max_other_fiber(const PLMapInterval& f, const Rational& x0);

FiberProfile fiber_profile(const PLMapInterval& f, const Rational& x0);

/// Candidate x0 points: values of constant pieces, the images of those values,
/// then images of all piece endpoints; duplicates removed, first occurrence
/// kept.
std::vector<Rational> candidate_points(const PLMapInterval& f);

/// certify_profiled over fiber_profile of every candidate point.
CertifyOutcome certify_pl(const PLMapInterval& f);

/// sup over [0,1] of |f(x) - g(x)|, exact. Uses one-sided limits at open
/// endpoints, so the supremum is returned even when it is not attained.
Rational sup_distance(const PLMapInterval& f, const PLMapInterval& g);

}  // namespace nonroot
