#pragma once

#include "nonroot/rational.hpp"

#include <compare>
#include <optional>
#include <utility>

namespace nonroot {

/// The chordal length 2 sin(pi d) of an angular distance d in [0, 1/2].
///
/// The value is kept symbolically through d. Comparisons against rationals
/// evaluate an enclosure with directed-rounding MPFR arithmetic, doubling the
/// working precision from 64 up to 4096 bits until the comparison is decided.
/// The rational values 0, 1 and 2 (d = 0, 1/6, 1/2) are recognised exactly;
/// for every other rational d the chord is irrational, so refinement always
/// terminates before the cap. Instances are immutable and hold no cache.
class ComparableReal {
 public:
  static constexpr unsigned kInitialPrecision = 64;
  static constexpr unsigned kMaxPrecision = 4096;

  /// Throws std::invalid_argument unless 0 <= d <= 1/2.
  static ComparableReal chord_of(const Rational& angular_distance);

  const Rational& angular() const noexcept { return d_; }

  /// Exact value when the chord is rational (d in {0, 1/6, 1/2}).
  std::optional<Rational> exact() const;

  /// Sign of (this - r). Throws Indeterminate if undecided at kMaxPrecision.
  std::strong_ordering compare(const Rational& r) const;

  bool less_than(const Rational& r) const { return compare(r) < 0; }

  /// Lower and upper bounds on the value at the given precision.
  std::pair<double, double> enclosure(unsigned precision = kInitialPrecision) const;

  double approx() const;

  /// Chords are monotone in d on [0, 1/2], so this is an exact comparison.
  friend std::strong_ordering operator<=>(const ComparableReal& a, const ComparableReal& b) {
    return cmp(a.d_, b.d_) <=> 0;
  }
  friend bool operator==(const ComparableReal& a, const ComparableReal& b) { return a.d_ == b.d_; }

 private:
  explicit ComparableReal(Rational d) : d_(std::move(d)) {}

  Rational d_;
};

}  // namespace nonroot
