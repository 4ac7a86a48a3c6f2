#pragma once

#include "nonroot/certifier.hpp"
#include "nonroot/circle.hpp"
#include "nonroot/constructor.hpp"
#include "nonroot/endo.hpp"
#include "nonroot/pl_interval.hpp"
#include "nonroot/root_solver.hpp"
#include "nonroot/symbolic.hpp"

#include <json.hpp>

#include <string>

namespace nonroot {

using Json = nlohmann::json;

/// Parse errors throw InputError naming the offending field.
Json read_json_file(const std::string& path);

/// "p/q" strings or JSON integers.
Rational decode_rational(const Json& j, const std::string& field);

enum class MapKind { endo, ray, interval, circle };
/// Decided by the top-level keys: "map", "rules", "pieces" or "partition".
MapKind detect_kind(const Json& j);

/// {"n", "map", "labels"?}; a RayMap whose families are all finite is also
/// accepted and materialized.
LabeledEndofunction decode_endo(const Json& j);
Json encode(const LabeledEndofunction& f);
Json encode(const Endofunction& f);

RayMap decode_ray_map(const Json& j);
Json encode(const RayMap& f);

PLMapInterval decode_interval(const Json& j);
Json encode(const PLMapInterval& f);
Json encode(const Segment& s);

/// Optional "constant_arcs" entries must name consecutive partition points
/// whose images both equal the stated value.
AdmissibleCircleMap decode_circle(const Json& j);
Json encode(const AdmissibleCircleMap& f);
Json encode(const Arc& a);

Json encode(const Cardinal& c);
Json encode(const FiberProfile& p, const LabeledEndofunction* names = nullptr);
Json encode(const NonRootCertificate& c, const LabeledEndofunction* names = nullptr);
/// {"certificate": {...}} or {"certificate": null, "reason": ..., "detail": ...}.
Json encode(const CertifyOutcome& o, const LabeledEndofunction* names = nullptr);
Json encode(const RootResult& r);

Json encode(const ConstructionTrace& t);
Json encode(const IntervalConstruction& c);

}  // namespace nonroot
