#pragma once

#include "nonroot/cardinal.hpp"
#include "nonroot/endo.hpp"
#include "nonroot/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nonroot {

/// A candidate point: an index of a finite domain, or a rational coordinate
/// (a point of [0,1] or an angle on the circle).
using PointId = std::variant<Point, Rational>;

std::string to_string(const PointId& p);

/// Fiber cardinalities around a candidate point x0.
struct FiberProfile {
  PointId point;
  Cardinal fiber1;           // #f^-1(x0)
  Cardinal fiber2;           // #f^-2(x0)
  Cardinal max_other_fiber;  // sup over x != x0 of #f^-1(x)
  bool not_fixed = false;    // f(x0) != x0
};

enum class CertificateCase { C1, C2, C3 };

std::string_view to_string(CertificateCase c);

inline constexpr std::string_view kCertificateScope = "no roots of any order n >= 2";

/// Witness that f has no iterative root g^n = f for any n >= 2.
struct NonRootCertificate {
  PointId x0;
  CertificateCase kind = CertificateCase::C1;
  FiberProfile evidence;
};

enum class AbstainReason {
  no_non_fixed_point,       // every candidate is a fixed point
  fixed_point_obstruction,  // fiber sizes would qualify, but only at fixed points
  inequality_fails,         // #f^-2(x0) <= N^3 at every non-fixed candidate
  fibers_too_large,         // f^-2(x0) is infinite but some other fiber is too big
  no_candidates,
};

std::string_view to_string(AbstainReason r);

struct Abstention {
  AbstainReason reason = AbstainReason::no_candidates;
  std::optional<FiberProfile> closest;  // the candidate that came nearest, if any
  std::string detail;
};

/// Either a certificate or a machine-readable reason for abstaining. An
/// abstention only means the criterion does not apply, never that roots exist.
struct CertifyOutcome {
  std::optional<NonRootCertificate> certificate;
  std::optional<Abstention> abstention;
};

/// The case a single profile satisfies, checking C3, then C2, then C1.
std::optional<CertificateCase> matching_case(const FiberProfile& p);

/// Throws InputError when the cardinals cannot come from any self-map, e.g.
/// #f^-2(x0) > #f^-1(x0) * max_other_fiber at a non-fixed point.
void validate_profile(const FiberProfile& p);

/// First profile (in the supplied order) matching any case wins.
CertifyOutcome certify_profiled(std::span<const FiberProfile> profiles);

/// Profiles of every point of a finite map, in index order.
std::vector<FiberProfile> finite_profiles(const Endofunction& f);

/// C1 criterion on a finite map: first x0 in index order with f(x0) != x0 and
/// #f^-2(x0) > N^3, where N = max over x != x0 of #f^-1(x).
CertifyOutcome certify_finite(const Endofunction& f);

/// Re-checks the case invariants of a certificate against its own evidence.
bool certificate_is_consistent(const NonRootCertificate& c);

}  // namespace nonroot
