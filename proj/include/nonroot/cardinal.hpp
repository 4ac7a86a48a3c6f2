#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace nonroot {

/// Three-level cardinality lattice Finite(k) < Aleph0 < Continuum.
///
/// Only the levels that finite, piecewise-affine and ray-indexed sources can
/// produce are represented. Arithmetic follows cardinal arithmetic: infinite
/// levels absorb products and sums with smaller nonzero cardinals, and
/// 0 * x = 0.
class Cardinal {
 public:
  enum class Kind { finite, aleph0, continuum };

  constexpr Cardinal() = default;

  static constexpr Cardinal finite(std::uint64_t count) { return Cardinal(Kind::finite, count); }
  static constexpr Cardinal aleph0() { return Cardinal(Kind::aleph0, 0); }
  static constexpr Cardinal continuum() { return Cardinal(Kind::continuum, 0); }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_finite() const noexcept { return kind_ == Kind::finite; }
  constexpr bool is_countable() const noexcept { return kind_ != Kind::continuum; }

  /// Element count; throws std::logic_error for infinite cardinals.
  std::uint64_t count() const;

  friend constexpr bool operator==(const Cardinal&, const Cardinal&) = default;
  friend constexpr std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    return a.count_ <=> b.count_;
  }

  /// Throws std::overflow_error when a finite result does not fit in 64 bits.
  friend Cardinal operator*(const Cardinal& a, const Cardinal& b);
  friend Cardinal operator+(const Cardinal& a, const Cardinal& b);

  /// "3", "aleph0" or "continuum".
  std::string to_string() const;
  static Cardinal parse(const std::string& text);

 private:
  constexpr Cardinal(Kind kind, std::uint64_t count) : kind_(kind), count_(count) {}

  Kind kind_ = Kind::finite;
  std::uint64_t count_ = 0;
};

}  // namespace nonroot
