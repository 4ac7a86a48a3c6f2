#pragma once

#include "nonroot/circle.hpp"
#include "nonroot/pl_interval.hpp"

#include <string>

namespace nonroot {

/// Graph of an interval map on the unit square. Closed piece endpoints are
/// filled dots, open ones hollow.
std::string svg_interval(const PLMapInterval& f);

/// Lift plot of a circle map: angle against image angle, both in [0,1),
/// with image segments cut where they wrap past 0.
std::string svg_circle(const AdmissibleCircleMap& f);

}  // namespace nonroot
