#include "nonroot/json_io.hpp"

#include "nonroot/errors.hpp"

#include <fstream>

namespace nonroot {

namespace {

const Json& field(const Json& j, const std::string& name) {
  if (!j.is_object()) throw InputError("expected a JSON object around field '" + name + "'");
  auto it = j.find(name);
  if (it == j.end()) throw InputError("missing field '" + name + "'");
  return *it;
}

std::string string_field(const Json& j, const std::string& name) {
  const Json& v = field(j, name);
  if (!v.is_string()) throw InputError("field '" + name + "' must be a string");
  return v.get<std::string>();
}

Index index_field(const Json& j, const std::string& name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw InputError("field '" + name + "' must be an integer");
  return v.get<Index>();
}

bool bool_field(const Json& j, const std::string& name, bool fallback) {
  auto it = j.find(name);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) throw InputError("field '" + name + "' must be a boolean");
  return it->get<bool>();
}

Json rational_json(const Rational& r) { return to_string(r); }

IndexRange decode_guard(const Json& g) {
  if (!g.is_object()) throw InputError("field 'guard' must be an object");
  if (g.contains("ray_from")) return IndexRange::ray(index_field(g, "ray_from"));
  return IndexRange::finite(index_field(g, "lo"), index_field(g, "hi"));
}

Json encode_range(const IndexRange& r) {
  if (r.is_ray()) return {{"ray_from", r.lo}};
  return {{"lo", r.lo}, {"hi", *r.hi}};
}

Json point_json(const PointId& p, const LabeledEndofunction* names) {
  if (const auto* i = std::get_if<Point>(&p)) {
    if (names && !names->labels.empty()) return names->label(*i);
    return *i;
  }
  return to_string(std::get<Rational>(p));
}

std::vector<Angle> angle_list(const Json& j, const std::string& name) {
  const Json& arr = field(j, name);
  if (!arr.is_array()) throw InputError("field '" + name + "' must be an array");
  std::vector<Angle> out;
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.emplace_back(decode_rational(arr[i], name + "[" + std::to_string(i) + "]"));
  return out;
}

Json angle_list_json(const std::vector<Angle>& v) {
  Json arr = Json::array();
  for (const auto& a : v) arr.push_back(to_string(a.turns()));
  return arr;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Rational decode_rational(const Json& j, const std::string& name) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError("field '" + name + "': " + e.what());
    }
  }
  throw InputError("field '" + name + "' must be a rational string \"p/q\" or an integer");
}

MapKind detect_kind(const Json& j) {
  if (!j.is_object()) throw InputError("top-level JSON value must be an object");
  if (j.contains("map")) return MapKind::endo;
  if (j.contains("rules")) return MapKind::ray;
  if (j.contains("pieces")) return MapKind::interval;
  if (j.contains("partition")) return MapKind::circle;
  throw InputError("cannot tell the map kind: expected one of 'map', 'rules', 'pieces', 'partition'");
}

LabeledEndofunction decode_endo(const Json& j) {
  if (j.is_object() && j.contains("rules")) {
    const RayMap f = decode_ray_map(j);
    for (const auto& fam : f.domain().families())
      if (fam.indices.is_ray()) throw InputError("family '" + fam.label + "' is infinite; cannot build a finite map");
    return materialize(f, 0).map;
  }
  const Json& map = field(j, "map");
  if (!map.is_array()) throw InputError("field 'map' must be an array");
  std::vector<Point> table;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (!map[i].is_number_unsigned() && !(map[i].is_number_integer() && map[i].get<long long>() >= 0))
      throw InputError("field 'map[" + std::to_string(i) + "]' must be a non-negative integer");
    table.push_back(map[i].get<Point>());
  }
  if (j.contains("n")) {
    const Json& n = j["n"];
    if (!n.is_number_integer() || n.get<long long>() != static_cast<long long>(table.size()))
      throw InputError("field 'n' must equal the length of 'map'");
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& l = j["labels"];
    if (!l.is_array() || l.size() != table.size())
      throw InputError("field 'labels' must be an array of length n");
    for (const auto& s : l) {
      if (!s.is_string()) throw InputError("field 'labels' must contain strings");
      labels.push_back(s.get<std::string>());
    }
  }
  return {Endofunction(std::move(table)), std::move(labels)};
}

Json encode(const Endofunction& f) { return {{"n", f.size()}, {"map", f.table()}}; }

Json encode(const LabeledEndofunction& f) {
  Json j = encode(f.map);
  if (!f.labels.empty()) j["labels"] = f.labels;
  return j;
}

RayMap decode_ray_map(const Json& j) {
  const Json& fams = field(j, "families");
  if (!fams.is_array()) throw InputError("field 'families' must be an array");
  std::vector<Family> families;
  for (const auto& f : fams) {
    IndexRange r = f.contains("hi") ? IndexRange::finite(index_field(f, "lo"), index_field(f, "hi"))
                                    : IndexRange::ray(index_field(f, "lo"));
    families.push_back({string_field(f, "label"), r});
  }
  const Json& rules_json = field(j, "rules");
  if (!rules_json.is_array()) throw InputError("field 'rules' must be an array");
  std::vector<RayRule> rules;
  for (const auto& r : rules_json) {
    const Json& action = field(r, "action");
    RayAction act;
    if (action.contains("shift")) {
      const Json& s = action["shift"];
      act = Shift{string_field(s, "dst"), index_field(s, "c")};
    } else if (action.contains("const")) {
      const Json& c = action["const"];
      act = Const{string_field(c, "dst"), index_field(c, "j")};
    } else {
      throw InputError("field 'action' must hold 'shift' or 'const'");
    }
    rules.push_back({string_field(r, "src"), decode_guard(field(r, "guard")), std::move(act)});
  }
  return RayMap(RayDomain(std::move(families)), std::move(rules));
}

Json encode(const RayMap& f) {
  Json fams = Json::array();
  for (const auto& fam : f.domain().families()) {
    Json e{{"label", fam.label}, {"lo", fam.indices.lo}};
    if (fam.indices.hi) e["hi"] = *fam.indices.hi;
    fams.push_back(e);
  }
  Json rules = Json::array();
  for (const auto& r : f.rules()) {
    Json action;
    if (const auto* s = std::get_if<Shift>(&r.action))
      action = {{"shift", {{"dst", s->target}, {"c", s->offset}}}};
    else
      action = {{"const", {{"dst", std::get<Const>(r.action).target}, {"j", std::get<Const>(r.action).index}}}};
    rules.push_back({{"src", r.source}, {"guard", encode_range(r.guard)}, {"action", action}});
  }
  return {{"families", fams}, {"rules", rules}};
}

PLMapInterval decode_interval(const Json& j) {
  const Json& arr = field(j, "pieces");
  if (!arr.is_array()) throw InputError("field 'pieces' must be an array");
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const Json& p = arr[i];
    const std::string at = "pieces[" + std::to_string(i) + "].";
    Segment dom{decode_rational(field(p, "lo"), at + "lo"), decode_rational(field(p, "hi"), at + "hi"),
                bool_field(p, "lo_closed", true), bool_field(p, "hi_closed", true)};
    pieces.push_back({dom, decode_rational(field(p, "a"), at + "a"), decode_rational(field(p, "b"), at + "b")});
  }
  return PLMapInterval(std::move(pieces));
}

Json encode(const Segment& s) {
  return {{"lo", rational_json(s.lo)}, {"hi", rational_json(s.hi)}, {"lo_closed", s.lo_closed},
          {"hi_closed", s.hi_closed}};
}

Json encode(const PLMapInterval& f) {
  Json arr = Json::array();
  for (const auto& p : f.pieces()) {
    Json e = encode(p.domain);
    e["a"] = rational_json(p.slope);
    e["b"] = rational_json(p.intercept);
    arr.push_back(e);
  }
  return {{"pieces", arr}};
}

AdmissibleCircleMap decode_circle(const Json& j) {
  CirclePartition partition(angle_list(j, "partition"));
  std::vector<Angle> raw = angle_list(j, "images");
  const std::vector<Angle> given = angle_list(j, "partition");
  if (raw.size() != given.size()) throw InputError("fields 'partition' and 'images' differ in length");
  // Images follow the order the points were given in; the partition sorts them.
  std::vector<Angle> images(raw.size());
  for (std::size_t i = 0; i < given.size(); ++i) {
    auto it = std::lower_bound(partition.points().begin(), partition.points().end(), given[i]);
    images[static_cast<std::size_t>(it - partition.points().begin())] = raw[i];
  }
  AdmissibleCircleMap f(partition, images);
  if (j.contains("constant_arcs")) {
    const Json& arcs = j["constant_arcs"];
    if (!arcs.is_array()) throw InputError("field 'constant_arcs' must be an array");
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const std::string at = "constant_arcs[" + std::to_string(i) + "].";
      const Angle start(decode_rational(field(arcs[i], "start"), at + "start"));
      const Angle end(decode_rational(field(arcs[i], "end"), at + "end"));
      const Angle value(decode_rational(field(arcs[i], "value"), at + "value"));
      if (!partition.has_point(start)) throw InputError("field '" + at + "start' is not a partition point");
      const std::size_t jdx = partition.locate(start);
      if (partition.point((jdx + 1) % partition.size()) != end)
        throw InputError("field '" + at + "end' is not the next partition point");
      if (!f.is_constant_arc(jdx) || f.images()[jdx] != value)
        throw InputError("field '" + at + "value' does not match a constant arc of the map");
    }
  }
  return f;
}

Json encode(const AdmissibleCircleMap& f) {
  Json arcs = Json::array();
  for (std::size_t j : f.constant_arcs()) {
    const Arc a = f.partition().arc(j);
    arcs.push_back({{"start", to_string(a.start().turns())},
                    {"end", to_string(a.end().turns())},
                    {"value", to_string(f.images()[j].turns())}});
  }
  Json out{{"partition", angle_list_json(f.partition().points())}, {"images", angle_list_json(f.images())}};
  if (!arcs.empty()) out["constant_arcs"] = arcs;
  return out;
}

Json encode(const Arc& a) { return {{"start", to_string(a.start().turns())}, {"end", to_string(a.end().turns())}}; }

Json encode(const Cardinal& c) { return c.to_string(); }

Json encode(const FiberProfile& p, const LabeledEndofunction* names) {
  return {{"x0", point_json(p.point, names)},
          {"fiber1", encode(p.fiber1)},
          {"fiber2", encode(p.fiber2)},
          {"max_other_fiber", encode(p.max_other_fiber)},
          {"not_fixed", p.not_fixed}};
}

Json encode(const NonRootCertificate& c, const LabeledEndofunction* names) {
  return {{"case", std::string(to_string(c.kind))},
          {"x0", point_json(c.x0, names)},
          {"scope", std::string(kCertificateScope)},
          {"evidence", encode(c.evidence, names)}};
}

Json encode(const CertifyOutcome& o, const LabeledEndofunction* names) {
  if (o.certificate) return {{"certificate", encode(*o.certificate, names)}};
  Json out{{"certificate", nullptr}};
  if (o.abstention) {
    out["reason"] = std::string(to_string(o.abstention->reason));
    out["detail"] = o.abstention->detail;
    out["closest"] = o.abstention->closest ? encode(*o.abstention->closest, names) : Json(nullptr);
  }
  return out;
}

Json encode(const RootResult& r) {
  Json out{{"status", r.status == RootStatus::found ? "found" : "none"},
           {"witness", r.witness ? encode(*r.witness) : Json(nullptr)},
           {"explored", r.explored}};
  if (r.count) out["count"] = r.count;
  return out;
}

Json encode(const ConstructionTrace& t) {
  return {{"epsilon", to_string(t.epsilon)},
          {"delta", to_string(t.delta)},
          {"P", angle_list_json(t.grid.points())},
          {"W", angle_list_json(t.grid_images)},
          {"f0", encode(t.approximant)},
          {"J", encode(t.window)},
          {"a", to_string(t.moved_point.turns())},
          {"K", encode(t.flat_arc)},
          {"x0", to_string(t.flat_value.turns())},
          {"x1", to_string(t.other_end.turns())},
          {"r", t.window_arc},
          {"r_prime", t.image_arc},
          {"swapped", t.endpoint_swapped},
          {"Q", angle_list_json(t.refined.points())},
          {"f", encode(t.result)}};
}

Json encode(const IntervalConstruction& c) {
  return {{"f", encode(c.map)},
          {"f0", encode(c.approximant)},
          {"lambda", to_string(c.blend)},
          {"J", encode(c.window)},
          {"K", encode(c.flat)},
          {"x0", to_string(c.flat_value)},
          {"sup_distance", to_string(c.distance)},
          {"certificate", encode(c.certificate)}};
}

}  // namespace nonroot
