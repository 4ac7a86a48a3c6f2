#include "nonroot/symbolic.hpp"

#include "nonroot/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nonroot {

bool IndexRange::contains(const IndexRange& other) const {
  if (other.empty()) return true;
  if (other.lo < lo) return false;
  if (!hi) return true;
  return other.hi && *other.hi <= *hi;
}

Cardinal IndexRange::size() const {
  if (!hi) return Cardinal::aleph0();
  return Cardinal::finite(*hi < lo ? 0 : static_cast<std::uint64_t>(*hi - lo + 1));
}

IndexRange IndexRange::shifted(Index c) const {
  return {lo + c, hi ? std::optional<Index>(*hi + c) : std::nullopt};
}

std::optional<IndexRange> intersect(const IndexRange& a, const IndexRange& b) {
  IndexRange r{std::max(a.lo, b.lo), std::nullopt};
  if (a.hi && b.hi)
    r.hi = std::min(*a.hi, *b.hi);
  else if (a.hi)
    r.hi = a.hi;
  else
    r.hi = b.hi;
  if (r.empty()) return std::nullopt;
  return r;
}

std::string to_string(const IndexRange& r) {
  if (!r.hi) return "[" + std::to_string(r.lo) + ", inf)";
  return "[" + std::to_string(r.lo) + ", " + std::to_string(*r.hi) + "]";
}

std::string to_string(const RayPoint& p) { return p.label + "_" + std::to_string(p.index); }

RayDomain::RayDomain(std::vector<Family> families) : families_(std::move(families)) {
  std::set<std::string> seen;
  for (const auto& f : families_) {
    if (f.label.empty()) throw InputError("family label must be non-empty");
    if (!seen.insert(f.label).second) throw InputError("duplicate family label '" + f.label + "'");
    if (f.indices.empty()) throw InputError("family '" + f.label + "' has an empty index set");
  }
  if (families_.empty()) throw InputError("domain needs at least one family");
}

const Family* RayDomain::find(const std::string& label) const {
  for (const auto& f : families_)
    if (f.label == label) return &f;
  return nullptr;
}

bool RayDomain::contains(const RayPoint& p) const {
  const Family* f = find(p.label);
  return f && f->indices.contains(p.index);
}

namespace {

const std::string& target_of(const RayAction& a) {
  return std::visit([](const auto& act) -> const std::string& { return act.target; }, a);
}

}  // namespace

RayMap::RayMap(RayDomain domain, std::vector<RayRule> rules) : domain_(std::move(domain)), rules_(std::move(rules)) {
  for (const auto& rule : rules_) {
    const Family* src = domain_.find(rule.source);
    if (!src) throw InputError("rule source '" + rule.source + "' is not a family");
    if (rule.guard.empty()) throw InputError("empty guard on family '" + rule.source + "'");
    if (!src->indices.contains(rule.guard))
      throw InputError("guard " + to_string(rule.guard) + " leaves family '" + rule.source + "'");
    const Family* dst = domain_.find(target_of(rule.action));
    if (!dst) throw InputError("rule target '" + target_of(rule.action) + "' is not a family");
    if (const auto* s = std::get_if<Shift>(&rule.action)) {
      if (!dst->indices.contains(rule.guard.shifted(s->offset)))
        throw InputError("shift by " + std::to_string(s->offset) + " on " + rule.source + to_string(rule.guard) +
                         " leaves family '" + s->target + "'");
    } else {
      const auto& c = std::get<Const>(rule.action);
      if (!dst->indices.contains(c.index))
        throw InputError("constant " + to_string(RayPoint{c.target, c.index}) + " is outside the domain");
    }
  }
  for (const auto& fam : domain_.families()) {
    std::vector<IndexRange> guards;
    for (const auto& rule : rules_)
      if (rule.source == fam.label) guards.push_back(rule.guard);
    std::sort(guards.begin(), guards.end(), [](const IndexRange& a, const IndexRange& b) { return a.lo < b.lo; });
    Index next = fam.indices.lo;
    bool open_ended = false;
    for (const auto& g : guards) {
      if (open_ended || g.lo != next)
        throw InputError("guards of family '" + fam.label + "' overlap or leave a gap at index " +
                         std::to_string(open_ended ? g.lo : std::min(g.lo, next)));
      if (g.hi)
        next = *g.hi + 1;
      else
        open_ended = true;
    }
    const bool covered = fam.indices.is_ray() ? open_ended : (!open_ended && next == *fam.indices.hi + 1);
    if (!covered) throw InputError("guards do not cover family '" + fam.label + "'");
  }
}

RayMap RayMap::identity(const RayDomain& domain) {
  std::vector<RayRule> rules;
  for (const auto& f : domain.families()) rules.push_back({f.label, f.indices, Shift{f.label, 0}});
  return RayMap(domain, std::move(rules));
}

const RayRule& RayMap::rule_for(const RayPoint& p) const {
  for (const auto& rule : rules_)
    if (rule.source == p.label && rule.guard.contains(p.index)) return rule;
  throw std::out_of_range("no rule covers " + to_string(p));
}

RayPoint RayMap::operator()(const RayPoint& p) const {
  const RayRule& rule = rule_for(p);
  if (const auto* s = std::get_if<Shift>(&rule.action)) return {s->target, p.index + s->offset};
  const auto& c = std::get<Const>(rule.action);
  return {c.target, c.index};
}

RayMap ray_compose(const RayMap& outer, const RayMap& inner) {
  if (!(outer.domain() == inner.domain())) throw InputError("cannot compose maps on different domains");
  std::vector<RayRule> out;
  for (const auto& rule : inner.rules()) {
    if (const auto* c = std::get_if<Const>(&rule.action)) {
      const RayPoint img = outer(RayPoint{c->target, c->index});
      out.push_back({rule.source, rule.guard, Const{img.label, img.index}});
      continue;
    }
    const auto& s = std::get<Shift>(rule.action);
    const IndexRange image = rule.guard.shifted(s.offset);
    for (const auto& o : outer.rules()) {
      if (o.source != s.target) continue;
      const auto part = intersect(image, o.guard);
      if (!part) continue;
      RayAction action;
      if (const auto* os = std::get_if<Shift>(&o.action))
        action = Shift{os->target, s.offset + os->offset};
      else
        action = std::get<Const>(o.action);
      out.push_back({rule.source, part->shifted(-s.offset), std::move(action)});
    }
  }
  try {
    return RayMap(inner.domain(), std::move(out));
  } catch (const InputError& e) {
    throw InputError(std::string("coverage violation while composing: ") + e.what());
  }
}

bool ray_equal(const RayMap& f, const RayMap& g) {
  if (!(f.domain() == g.domain())) return false;
  for (const auto& fam : f.domain().families()) {
    std::set<Index> cuts{fam.indices.lo};
    for (const RayMap* m : {&f, &g})
      for (const auto& rule : m->rules()) {
        if (rule.source != fam.label) continue;
        cuts.insert(rule.guard.lo);
        if (rule.guard.hi) cuts.insert(*rule.guard.hi + 1);
      }
    std::vector<Index> sorted(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      IndexRange atom{sorted[i], std::nullopt};
      if (i + 1 < sorted.size()) atom.hi = sorted[i + 1] - 1;
      if (!fam.indices.contains(atom.lo)) continue;
      if (!atom.hi && !fam.indices.is_ray()) continue;
      const RayPoint p{fam.label, atom.lo};
      if (atom.hi && *atom.hi == atom.lo) {
        if (f(p) != g(p)) return false;
        continue;
      }
      if (!(f.rule_for(p).action == g.rule_for(p).action)) return false;
    }
  }
  return true;
}

Cardinal ray_fiber_cardinal(const RayMap& f, const RayPoint& p) {
  if (!f.domain().contains(p)) throw std::out_of_range(to_string(p) + " is not in the domain");
  Cardinal total = Cardinal::finite(0);
  for (const auto& rule : f.rules()) {
    if (const auto* s = std::get_if<Shift>(&rule.action)) {
      if (s->target == p.label && rule.guard.contains(p.index - s->offset)) total = total + Cardinal::finite(1);
    } else {
      const auto& c = std::get<Const>(rule.action);
      if (c.target == p.label && c.index == p.index) total = total + rule.guard.size();
    }
  }
  return total;
}

Cardinal ray_max_other_fiber(const RayMap& f, const RayPoint& exclude) {
  Cardinal best = Cardinal::finite(0);
  for (const auto& fam : f.domain().families()) {
    std::set<Index> cand{fam.indices.lo};
    if (fam.indices.hi) cand.insert(*fam.indices.hi);
    if (exclude.label == fam.label) {
      cand.insert(exclude.index - 1);
      cand.insert(exclude.index + 1);
    }
    for (const auto& rule : f.rules()) {
      if (target_of(rule.action) != fam.label) continue;
      if (const auto* s = std::get_if<Shift>(&rule.action)) {
        cand.insert(rule.guard.lo + s->offset);
        cand.insert(rule.guard.lo + s->offset - 1);
        if (rule.guard.hi) {
          cand.insert(*rule.guard.hi + s->offset);
          cand.insert(*rule.guard.hi + s->offset + 1);
        }
      } else {
        const Index j = std::get<Const>(rule.action).index;
        cand.insert(j - 1);
        cand.insert(j);
        cand.insert(j + 1);
      }
    }
    if (fam.indices.is_ray()) cand.insert(*cand.rbegin() + 1);
    for (Index j : cand) {
      const RayPoint p{fam.label, j};
      if (p == exclude || !fam.indices.contains(j)) continue;
      best = std::max(best, ray_fiber_cardinal(f, p));
    }
  }
  return best;
}

std::optional<Point> Materialized::index_of(const RayPoint& p) const {
  auto it = std::find(points.begin(), points.end(), p);
  if (it == points.end()) return std::nullopt;
  return static_cast<Point>(it - points.begin());
}

Materialized materialize(const RayMap& f, Index upper) {
  std::vector<RayPoint> points;
  std::map<RayPoint, Point> where;
  for (const auto& fam : f.domain().families()) {
    const Index top = fam.indices.hi ? *fam.indices.hi : upper;
    for (Index j = fam.indices.lo; j <= top; ++j) {
      where.emplace(RayPoint{fam.label, j}, points.size());
      points.push_back({fam.label, j});
    }
  }
  if (points.empty()) throw InputError("materialization window is empty");
  std::vector<Point> table(points.size());
  std::vector<bool> defined(points.size(), true);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < points.size(); ++i) {
    labels.push_back(to_string(points[i]));
    auto it = where.find(f(points[i]));
    if (it == where.end()) {
      table[i] = i;
      defined[i] = false;
    } else {
      table[i] = it->second;
    }
  }
  return {LabeledEndofunction{Endofunction(std::move(table)), std::move(labels)}, std::move(points),
          std::move(defined)};
}

// ---------------------------------------------------------------- blocks

BlockSystem::BlockSystem(std::vector<Block> blocks, std::map<std::string, Arrow> arrows)
    : blocks_(std::move(blocks)), arrows_(std::move(arrows)) {
  std::set<std::string> labels;
  for (const auto& b : blocks_)
    if (!labels.insert(b.label).second) throw InputError("duplicate block '" + b.label + "'");
  for (const auto& [src, arrow] : arrows_)
    if (!labels.count(src)) throw InputError("arrow from unknown block '" + src + "'");
  for (const auto& b : blocks_) {
    auto it = arrows_.find(b.label);
    if (it == arrows_.end()) throw InputError("block '" + b.label + "' has no arrow");
    const Arrow& a = it->second;
    if (!labels.count(a.target)) throw InputError("arrow into unknown block '" + a.target + "'");
    const Block& dst = block(a.target);
    if (dst.kind == BlockKind::point && a.kind != ArrowKind::constant)
      throw InputError("arrow " + b.label + " -> " + a.target + " must be constant");
    if (dst.kind == BlockKind::cantor) {
      if (b.kind != BlockKind::cantor) throw InputError("point '" + b.label + "' cannot map onto a Cantor block");
      if (a.kind != ArrowKind::bijection)
        throw InputError("arrow " + b.label + " -> " + a.target + " between Cantor blocks must be a bijection");
    }
  }
}

const Block& BlockSystem::block(const std::string& label) const {
  for (const auto& b : blocks_)
    if (b.label == label) return b;
  throw std::out_of_range("no block '" + label + "'");
}

std::vector<std::string> BlockSystem::preimage(const std::string& target) const {
  std::vector<std::string> out;
  for (const auto& b : blocks_)
    if (arrows_.at(b.label).target == target) out.push_back(b.label);
  return out;
}

Measure BlockSystem::fiber_measure(const std::string& target) const {
  if (block(target).kind == BlockKind::cantor) return Measure::zero;
  for (const auto& src : preimage(target)) {
    const Block& b = block(src);
    if (b.kind == BlockKind::cantor && b.measure == Measure::positive) return Measure::positive;
  }
  return Measure::zero;
}

BlockSystem block_compose(const BlockSystem& outer, const BlockSystem& inner) {
  std::map<std::string, Arrow> arrows;
  for (const auto& b : inner.blocks()) {
    const Arrow& first = inner.arrow(b.label);
    const Arrow& second = outer.arrow(first.target);
    const bool bij = first.kind == ArrowKind::bijection && second.kind == ArrowKind::bijection;
    arrows[b.label] = Arrow{second.target, bij ? ArrowKind::bijection : ArrowKind::constant};
  }
  return BlockSystem(inner.blocks(), std::move(arrows));
}

BlockSystem ex4_root_system() {
  std::vector<Block> blocks{
      {"C_hat", BlockKind::cantor, Measure::positive},
      {"C1", BlockKind::cantor, Measure::zero},
      {"C2", BlockKind::cantor, Measure::zero},
      {"C3", BlockKind::cantor, Measure::zero},
      {"x0", BlockKind::point, Measure::zero},
      {"x1", BlockKind::point, Measure::zero},
      {"x2", BlockKind::point, Measure::zero},
      {"x3", BlockKind::point, Measure::zero},
  };
  std::map<std::string, Arrow> arrows{
      {"C_hat", {"C1", ArrowKind::bijection}}, {"C1", {"C2", ArrowKind::bijection}},
      {"C2", {"C3", ArrowKind::bijection}},    {"C3", {"x0", ArrowKind::constant}},
      {"x0", {"x1", ArrowKind::constant}},     {"x1", {"x2", ArrowKind::constant}},
      {"x2", {"x3", ArrowKind::constant}},     {"x3", {"x0", ArrowKind::constant}},
  };
  return BlockSystem(std::move(blocks), std::move(arrows));
}

bool BlockReport::all_passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const BlockCheck& c) { return c.passed; });
}

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "}";
}

}  // namespace

BlockReport block_verify(const BlockSystem& g) {
  BlockReport report;
  const BlockSystem f = block_compose(g, g);

  // The two chains of f = g o g.
  const std::map<std::string, Arrow> expected{
      {"C_hat", {"C2", ArrowKind::bijection}}, {"C2", {"x0", ArrowKind::constant}},
      {"x0", {"x2", ArrowKind::constant}},     {"x2", {"x0", ArrowKind::constant}},
      {"C1", {"C3", ArrowKind::bijection}},    {"C3", {"x1", ArrowKind::constant}},
      {"x1", {"x3", ArrowKind::constant}},     {"x3", {"x1", ArrowKind::constant}},
  };
  std::vector<std::string> mismatches;
  for (const auto& [src, arrow] : expected) {
    auto it = f.arrows().find(src);
    if (it == f.arrows().end() || !(it->second == arrow))
      mismatches.push_back(src + " -> " + (it == f.arrows().end() ? "?" : it->second.target));
  }
  if (f.arrows().size() != expected.size()) mismatches.push_back("unexpected blocks");
  report.checks.push_back({"g o g yields the chains C_hat->C2->x0->x2->x0 and C1->C3->x1->x3->x1",
                           mismatches.empty(), mismatches.empty() ? "" : "mismatch: " + join(mismatches)});

  const bool has_x0 = f.arrows().count("x0") > 0;
  const std::string fx0 = has_x0 ? f.arrow("x0").target : "?";
  report.checks.push_back({"f(x0) = x2 != x0", fx0 == "x2", "f(x0) = " + fx0});

  std::vector<std::string> level2;
  std::vector<std::string> positive;
  if (has_x0) {
    for (const auto& b1 : f.preimage("x0"))
      for (const auto& b2 : f.preimage(b1)) level2.push_back(b2);
    for (const auto& b : level2)
      if (f.block(b).kind == BlockKind::cantor && f.block(b).measure == Measure::positive) positive.push_back(b);
  }
  report.checks.push_back({"positive-measure part of f^-2(x0) is exactly C_hat",
                           positive == std::vector<std::string>{"C_hat"},
                           "f^-2(x0) = " + join(level2) + ", positive part " + join(positive)});

  std::vector<std::string> heavy;
  for (const auto& b : f.blocks())
    if (b.label != "x0" && f.fiber_measure(b.label) == Measure::positive) heavy.push_back(b.label);
  report.checks.push_back({"f^-1(x) has measure zero for every x != x0", heavy.empty(),
                           heavy.empty() ? "" : "positive fibers over " + join(heavy)});

  const bool hypotheses = std::all_of(report.checks.begin(), report.checks.end(),
                                      [](const BlockCheck& c) { return c.passed; });
  report.checks.push_back({"measure analogue of the criterion fails: its hypotheses hold yet f = g o g",
                           hypotheses,
                           hypotheses ? "f(x0) != x0, f^-2(x0) has positive measure, other fibers null, and g is a "
                                        "square root"
                                      : "hypotheses not established"});
  return report;
}

BlockReport block_verify_ex4() { return block_verify(ex4_root_system()); }

}  // namespace nonroot
