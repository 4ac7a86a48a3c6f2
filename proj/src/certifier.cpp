#include "nonroot/certifier.hpp"

#include "nonroot/errors.hpp"

#include <algorithm>

namespace nonroot {

std::string to_string(const PointId& p) {
  if (const auto* i = std::get_if<Point>(&p)) return std::to_string(*i);
  return to_string(std::get<Rational>(p));
}

std::string_view to_string(CertificateCase c) {
  switch (c) {
    case CertificateCase::C1:
      return "C1";
    case CertificateCase::C2:
      return "C2";
    case CertificateCase::C3:
      return "C3";
  }
  return "?";
}

std::string_view to_string(AbstainReason r) {
  switch (r) {
    case AbstainReason::no_non_fixed_point:
      return "no_non_fixed_point";
    case AbstainReason::fixed_point_obstruction:
      return "fixed_point_obstruction";
    case AbstainReason::inequality_fails:
      return "inequality_fails";
    case AbstainReason::fibers_too_large:
      return "fibers_too_large";
    case AbstainReason::no_candidates:
      return "no_candidates";
  }
  return "?";
}

namespace {

// Fiber conditions of each case, ignoring whether x0 is fixed.
std::optional<CertificateCase> matching_fibers(const FiberProfile& p) {
  if (p.fiber2 == Cardinal::continuum() && p.max_other_fiber.is_countable()) return CertificateCase::C3;
  if (!p.fiber2.is_finite() && p.max_other_fiber.is_finite()) return CertificateCase::C2;
  if (p.fiber2.is_finite() && p.max_other_fiber.is_finite()) {
    const Cardinal n = p.max_other_fiber;
    if (p.fiber2 > n * n * n) return CertificateCase::C1;
  }
  return std::nullopt;
}

std::string describe(const FiberProfile& p) {
  return "x0=" + to_string(p.point) + " #f^-1(x0)=" + p.fiber1.to_string() + " #f^-2(x0)=" + p.fiber2.to_string() +
         " N=" + p.max_other_fiber.to_string() + " not_fixed=" + (p.not_fixed ? "true" : "false");
}

}  // namespace

std::optional<CertificateCase> matching_case(const FiberProfile& p) {
  if (!p.not_fixed) return std::nullopt;
  return matching_fibers(p);
}

void validate_profile(const FiberProfile& p) {
  if (p.fiber1 == Cardinal::finite(0) && p.fiber2 != Cardinal::finite(0))
    throw InputError("malformed profile at " + to_string(p.point) + ": f^-2 nonempty but f^-1 empty");
  // f^-2(x0) is the union of f^-1(y) over y in f^-1(x0), and y != x0 when x0 is not fixed.
  if (p.not_fixed && p.fiber2 > p.fiber1 * p.max_other_fiber)
    throw InputError("malformed profile at " + to_string(p.point) + ": #f^-2(x0) exceeds #f^-1(x0) * N");
}

CertifyOutcome certify_profiled(std::span<const FiberProfile> profiles) {
  for (const auto& p : profiles) validate_profile(p);
  for (const auto& p : profiles) {
    if (auto c = matching_case(p)) return {NonRootCertificate{p.point, *c, p}, std::nullopt};
  }

  Abstention why;
  if (profiles.empty()) {
    why.reason = AbstainReason::no_candidates;
    why.detail = "no candidate points";
    return {std::nullopt, why};
  }
  for (const auto& p : profiles) {
    if (!p.not_fixed && matching_fibers(p)) {
      why.reason = AbstainReason::fixed_point_obstruction;
      why.closest = p;
      why.detail = "fiber condition holds only at a fixed point: " + describe(p);
      return {std::nullopt, why};
    }
  }
  const FiberProfile* best = nullptr;
  for (const auto& p : profiles)
    if (p.not_fixed && (best == nullptr || p.fiber2 > best->fiber2)) best = &p;
  if (best == nullptr) {
    why.reason = AbstainReason::no_non_fixed_point;
    why.detail = "every candidate is a fixed point";
    return {std::nullopt, why};
  }
  why.closest = *best;
  if (!best->fiber2.is_finite()) {
    why.reason = AbstainReason::fibers_too_large;
    why.detail = "other fibers too large: " + describe(*best);
  } else {
    why.reason = AbstainReason::inequality_fails;
    why.detail = "strict inequality #f^-2(x0) > N^3 fails: " + describe(*best);
  }
  return {std::nullopt, why};
}

std::vector<FiberProfile> finite_profiles(const Endofunction& f) {
  const std::size_t n = f.size();
  const std::vector<std::size_t> sizes = fiber_sizes(f);
  std::vector<std::size_t> second(n, 0);
  for (Point y = 0; y < n; ++y) second[f(y)] += sizes[y];

  // Top two fiber sizes give max over x != x0 in O(1) per x0.
  Point argmax = 0;
  for (Point x = 1; x < n; ++x)
    if (sizes[x] > sizes[argmax]) argmax = x;
  std::size_t runner_up = 0;
  for (Point x = 0; x < n; ++x)
    if (x != argmax) runner_up = std::max(runner_up, sizes[x]);

  std::vector<FiberProfile> out;
  out.reserve(n);
  for (Point x = 0; x < n; ++x) {
    const std::size_t other = x == argmax ? runner_up : sizes[argmax];
    out.push_back(FiberProfile{x, Cardinal::finite(sizes[x]), Cardinal::finite(second[x]), Cardinal::finite(other),
                               f(x) != x});
  }
  return out;
}

CertifyOutcome certify_finite(const Endofunction& f) {
  const auto profiles = finite_profiles(f);
  return certify_profiled(profiles);
}

bool certificate_is_consistent(const NonRootCertificate& c) {
  const FiberProfile& e = c.evidence;
  if (!e.not_fixed || e.point != c.x0) return false;
  switch (c.kind) {
    case CertificateCase::C1:
      return e.max_other_fiber.is_finite() &&
             e.fiber2 > e.max_other_fiber * e.max_other_fiber * e.max_other_fiber;
    case CertificateCase::C2:
      return !e.fiber2.is_finite() && e.max_other_fiber.is_finite();
    case CertificateCase::C3:
      return e.fiber2 == Cardinal::continuum() && e.max_other_fiber.is_countable();
  }
  return false;
}

}  // namespace nonroot
