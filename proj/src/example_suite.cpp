#include "nonroot/example_suite.hpp"

#include "nonroot/errors.hpp"
#include "nonroot/json_io.hpp"

#include <filesystem>
#include <functional>
#include <random>
#include <sstream>

namespace nonroot {

namespace {

struct Corpus {
  std::string dir;
  Json load(const std::string& name) const { return read_json_file(dir + "/" + name); }
};

std::string show(const CertifyOutcome& o) { return encode(o).dump(); }

bool segment_inside(const CardinalSet& s, const Segment& seg) { return s.contains(seg); }

AnchorResult f1_anchor(const Corpus& c) {
  const PLMapInterval f = decode_interval(c.load("f1.json"));
  const CertifyOutcome out = certify_pl(f);
  const Rational x0(3, 4);
  bool ok = out.certificate && out.certificate->kind == CertificateCase::C3 &&
            out.certificate->x0 == PointId(x0) && out.certificate->evidence.max_other_fiber.is_finite();
  ok = ok && segment_inside(preimage_point(f, x0), Segment::closed(Rational(1, 4), Rational(1, 2)));
  ok = ok && segment_inside(preimage2_point(f, x0), Segment::closed(Rational(1, 12), Rational(1, 6)));
  return {"f1: C3 at x0 = 3/4", ok, show(out)};
}

AnchorResult f2_anchor(const Corpus& c) {
  const PLMapInterval f = decode_interval(c.load("f2.json"));
  const CertifyOutcome out = certify_pl(f);
  const Rational x0(1, 4);
  bool ok = out.certificate && out.certificate->kind == CertificateCase::C3 && out.certificate->x0 == PointId(x0);
  ok = ok && segment_inside(preimage_point(f, x0), Segment::open(Rational(1, 2), Rational(3, 4)));
  return {"f2: C3 at x0 = 1/4", ok, show(out)};
}

AnchorResult collapse_anchor(const Corpus& c) {
  const LabeledEndofunction f = decode_endo(c.load("remark2_f.json"));
  const LabeledEndofunction g = decode_endo(c.load("remark2_g.json"));
  const bool root = verify_root(f.map, g.map, 2);
  const CertifyOutcome out = certify_finite(f.map);
  const bool abstains = !out.certificate && out.abstention->reason == AbstainReason::fixed_point_obstruction;
  return {"constant collapse: g^2 = f, abstain (fixed point)", root && abstains,
          std::string("g^2 = f: ") + (root ? "yes" : "no") + "; " + show(out)};
}

AnchorResult nine_fiber_anchor(const Corpus& c) {
  const LabeledEndofunction f = decode_endo(c.load("remark3_f.json"));
  const LabeledEndofunction g = decode_endo(c.load("remark3_g.json"));
  const bool root = verify_root(f.map, g.map, 2);
  const CertifyOutcome out = certify_finite(f.map);
  bool abstains = !out.certificate && out.abstention->reason == AbstainReason::inequality_fails;
  if (abstains && out.abstention->closest) {
    const FiberProfile& p = *out.abstention->closest;
    abstains = p.fiber2 == Cardinal::finite(9) && p.max_other_fiber == Cardinal::finite(9);
  }
  return {"nine-fiber map: g^2 = f, abstain (9 <= 9^3)", root && abstains,
          std::string("g^2 = f: ") + (root ? "yes" : "no") + "; " + show(out)};
}

AnchorResult ray_root_anchor(const Corpus& c) {
  const RayMap f = decode_ray_map(c.load("remark4_f.json"));
  const RayMap g = decode_ray_map(c.load("remark4_g.json"));
  const bool eq = ray_equal(ray_compose(g, g), f);
  return {"ray pair: g o g = f symbolically", eq, eq ? "rule-equal" : "g o g differs from f"};
}

// Only reads f, so a damaged g shows up in the root anchor alone.
AnchorResult ray_sharpness_anchor(const Corpus& c) {
  const RayMap f = decode_ray_map(c.load("remark4_f.json"));
  const RayPoint x0{"x", 0};
  const Cardinal second = ray_fiber_cardinal(ray_compose(f, f), x0);
  const Cardinal n = ray_max_other_fiber(f, x0);
  const Materialized window = materialize(f, 2);
  const CertifyOutcome out = certify_finite(window.map.map);
  bool abstains = !out.certificate && out.abstention->reason == AbstainReason::inequality_fails;
  if (abstains && out.abstention->closest) {
    const FiberProfile& p = *out.abstention->closest;
    abstains = p.point == PointId(*window.index_of(x0)) && p.fiber2 == Cardinal::finite(8) &&
               p.max_other_fiber == Cardinal::finite(2);
  }
  const bool ok = second == Cardinal::finite(8) && n == Cardinal::finite(2) && abstains;
  return {"ray pair sharpness: #f^-2(x0) = 8 = 2^3, abstain", ok,
          "#f^-2(x0)=" + second.to_string() + " N=" + n.to_string() + "; truncation " + show(out)};
}

AnchorResult measure_anchor() {
  const BlockReport report = block_verify_ex4();
  std::string detail;
  for (const auto& check : report.checks) detail += std::string(check.passed ? "[ok] " : "[FAIL] ") + check.name + "; ";
  return {"measure analogue counterexample", report.all_passed(), detail};
}

AnchorResult circle_density_anchor(const Corpus& c) {
  std::ostringstream detail;
  bool ok = true;
  for (const char* name : {"circle_identity.json", "circle_rotation_third.json", "circle_5bp.json"}) {
    const AdmissibleCircleMap h = decode_circle(c.load(name));
    for (const Rational& eps : {Rational(1, 2), Rational(1, 10)}) {
      const CircleConstruction built = construct_non_iterate(h, eps);
      std::size_t failed = 0;
      for (const auto& check : check_trace(h, built.trace)) failed += check.passed ? 0 : 1;
      const bool close = sup_distance_circle(built.map, h).less_than(eps);
      const bool c3 = built.certificate.kind == CertificateCase::C3;
      ok = ok && failed == 0 && close && c3;
      detail << name << "@" << eps.get_str() << ":" << (failed == 0 && close && c3 ? "ok" : "FAIL") << " ";
    }
  }
  return {"density on the circle (3 maps x 2 epsilons)", ok, detail.str()};
}

AnchorResult interval_density_anchor(const Corpus& c) {
  std::ostringstream detail;
  bool ok = true;
  for (const char* name : {"interval_identity.json", "f1.json", "interval_constant_half.json"}) {
    const PLMapInterval h = decode_interval(c.load(name));
    for (const Rational& eps : {Rational(1, 2), Rational(1, 10)}) {
      const IntervalConstruction built = construct_non_iterate_interval(h, eps);
      const std::array<FiberProfile, 1> profile{fiber_profile(built.map, built.flat_value)};
      const CertifyOutcome again = certify_profiled(profile);
      const bool good = again.certificate && again.certificate->kind == CertificateCase::C3 &&
                        sup_distance(built.map, h) < eps;
      ok = ok && good;
      detail << name << "@" << eps.get_str() << ":" << (good ? "ok" : "FAIL") << " ";
    }
  }
  return {"density on the interval (3 maps x 2 epsilons)", ok, detail.str()};
}

AnchorResult fuzz_anchor(std::uint64_t seed, std::size_t maps) {
  std::mt19937_64 rng(seed);
  std::size_t certified = 0, violations = 0;
  for (std::size_t i = 0; i < maps; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    std::vector<Point> table(n);
    for (auto& v : table) v = std::uniform_int_distribution<Point>(0, n - 1)(rng);
    const Endofunction f(table);
    if (!certify_finite(f).certificate) continue;
    ++certified;
    for (std::size_t order : {2, 3})
      if (find_root(RootQuery{f, order}).status == RootStatus::found) ++violations;
  }
  std::ostringstream detail;
  detail << "seed " << seed << ", " << maps << " maps, " << certified << " certified, " << violations
         << " violations";
  return {"certificates confirmed by exhaustive search", violations == 0 && certified > 0, detail.str()};
}

}  // namespace

const std::vector<std::string>& suite_corpus_files() {
  static const std::vector<std::string> files{
      "f1.json",          "f2.json",          "remark2_f.json",         "remark2_g.json",
      "remark3_f.json",   "remark3_g.json",   "remark4_f.json",         "remark4_g.json",
      "circle_identity.json", "circle_rotation_third.json", "circle_5bp.json",
      "interval_identity.json", "interval_constant_half.json"};
  return files;
}

std::vector<AnchorResult> verify_paper(const SuiteOptions& options) {
  for (const auto& name : suite_corpus_files())
    if (!std::filesystem::exists(std::filesystem::path(options.corpus_dir) / name))
      throw InputError("missing corpus file '" + name + "' in '" + options.corpus_dir + "'");

  const Corpus corpus{options.corpus_dir};
  std::vector<std::pair<std::string, std::function<AnchorResult()>>> anchors{
      {"f1", [&] { return f1_anchor(corpus); }},
      {"f2", [&] { return f2_anchor(corpus); }},
      {"constant collapse", [&] { return collapse_anchor(corpus); }},
      {"nine-fiber map", [&] { return nine_fiber_anchor(corpus); }},
      {"ray pair", [&] { return ray_root_anchor(corpus); }},
      {"ray pair sharpness", [&] { return ray_sharpness_anchor(corpus); }},
      {"measure counterexample", [] { return measure_anchor(); }},
      {"circle density", [&] { return circle_density_anchor(corpus); }},
      {"interval density", [&] { return interval_density_anchor(corpus); }},
      {"soundness fuzz", [&] { return fuzz_anchor(options.seed, options.fuzz_maps); }},
  };
  std::vector<AnchorResult> results;
  for (const auto& [label, anchor] : anchors) {
    try {
      results.push_back(anchor());
    } catch (const std::exception& e) {
      results.push_back({label, false, std::string("error: ") + e.what()});
    }
  }
  return results;
}

}  // namespace nonroot
