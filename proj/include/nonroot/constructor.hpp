#pragma once

#include "nonroot/certifier.hpp"
#include "nonroot/circle.hpp"
#include "nonroot/pl_interval.hpp"

#include <string>
#include <vector>

namespace nonroot {

/// Every intermediate object of the circle construction, in build order.
struct ConstructionTrace {
  Rational epsilon;
  Rational delta;                     // continuity bound for h
  CirclePartition grid;               // fine partition, mesh < delta/2
  std::vector<Angle> grid_images;     // perturbed values near h on the grid
  AdmissibleCircleMap approximant;    // admissible map through grid_images
  Arc window;                         // arc J where the approximant is modified
  Angle moved_point;                  // point of the window not fixed by the approximant
  Arc flat_arc;                       // arc K, mapped to a single point
  Angle flat_value;                   // x0
  Angle other_end;                    // x1
  std::size_t window_arc = 0;         // grid arc containing the window
  std::size_t image_arc = 0;          // grid arc containing the window's image
  bool endpoint_swapped = false;      // x0 taken from the far end of K
  CirclePartition refined;            // grid plus the window and flat-arc endpoints
  AdmissibleCircleMap result;         // the constructed map
};

struct CircleConstruction {
  AdmissibleCircleMap map;
  ConstructionTrace trace;
  NonRootCertificate certificate;
};

/// Rational delta in (0, 1/4) such that chordal |z - z'| < delta implies
/// chordal |h(z) - h(z')| < eps/10.
///
/// From the largest angular slope L of h: chordal distance is at most 2 pi
/// times and at least 4 times the angular distance, so delta <= eps / (5 pi L)
/// suffices; 22/7 stands in for pi and the result is rounded down to a power
/// of two. Throws std::invalid_argument unless 0 < eps < 1.
Rational continuity_delta(const AdmissibleCircleMap& h, const Rational& eps);

/// A map within eps of h (uniform chordal metric) that is constant on a small
/// arc and certified (C3) to have no iterative roots of any order.
///
/// Searches run over deterministic dyadic grids, coarsest first, so the same
/// input always yields the same trace. Throws std::invalid_argument for eps
/// outside (0,1) and ConstructionFailure naming the step whose search ran out.
CircleConstruction construct_non_iterate(const AdmissibleCircleMap& h, const Rational& eps);

struct TraceCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Re-checks every invariant of a trace with exact predicates.
std::vector<TraceCheck> check_trace(const AdmissibleCircleMap& h, const ConstructionTrace& trace);

/// f and g coincide on the closure of the complement of the arc.
bool agree_outside(const AdmissibleCircleMap& f, const AdmissibleCircleMap& g, const Arc& arc);

struct IntervalConstruction {
  PLMapInterval map;
  PLMapInterval approximant;  // blend of h with x/2 + 1/4; no constant pieces
  Rational blend;
  Segment window;             // where the approximant is modified
  Segment flat;               // sub-interval mapped to flat_value
  Rational flat_value;
  Rational distance;          // sup |map - h|
  NonRootCertificate certificate;
};

/// Interval analogue: blend away constant pieces, then flatten a small
/// sub-interval K to a value x0 with f(x0) != x0, ramping back to the
/// approximant on both sides. The result is certified afterwards with
/// fiber_profile and certify_profiled; a candidate is accepted only with a C3
/// certificate and sup distance below eps. Throws InputError for
/// discontinuous h, std::invalid_argument for eps outside (0,1), and
/// ConstructionFailure if the search grid is exhausted.
IntervalConstruction construct_non_iterate_interval(const PLMapInterval& h, const Rational& eps);

}  // namespace nonroot
