#include "nonroot/circle.hpp"

#include "nonroot/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace nonroot {

std::string to_string(const Angle& a) { return to_string(a.turns()); }

Rational ccw_distance(const Angle& from, const Angle& to) { return frac(Rational(to.turns() - from.turns())); }

Rational angular_distance(const Angle& a, const Angle& b) {
  const Rational d = ccw_distance(a, b);
  return d <= Rational(1, 2) ? d : Rational(1 - d);
}

bool cyclic_order(const Angle& z0, const Angle& z1, const Angle& z2) {
  if (z0 == z1 || z1 == z2 || z0 == z2) throw std::invalid_argument("cyclic_order needs three distinct points");
  return ccw_distance(z0, z1) < ccw_distance(z0, z2);
}

Arc::Arc(Angle start, Angle end) : start_(std::move(start)), end_(std::move(end)) {
  if (start_ == end_) throw std::invalid_argument("degenerate arc at " + to_string(start_));
}

bool Arc::contains(const Angle& z) const { return ccw_distance(start_, z) <= length(); }

bool Arc::contains_open(const Angle& z) const {
  const Rational d = ccw_distance(start_, z);
  return d > 0 && d < length();
}

std::string to_string(const Arc& a) { return "[" + to_string(a.start()) + " -> " + to_string(a.end()) + "]"; }

CardinalSet wrap_segment(const Segment& lifted) {
  if (lifted.empty()) return {};
  if (lifted.hi - lifted.lo > 1) throw std::invalid_argument("lifted segment longer than a full turn");
  const Rational shift = floor(lifted.lo);
  Segment s{Rational(lifted.lo - shift), Rational(lifted.hi - shift), lifted.lo_closed, lifted.hi_closed};
  if (s.hi < 1 || (s.hi == 1 && !s.hi_closed)) return CardinalSet({s});
  Segment upper{s.lo, Rational(1), s.lo_closed, false};
  Segment lower{Rational(0), Rational(s.hi - 1), true, s.hi_closed};
  return CardinalSet({upper, lower});
}

CardinalSet arc_set(const Arc& a, bool closed) {
  const Rational lo = a.start().turns();
  return wrap_segment(Segment{lo, Rational(lo + a.length()), closed, closed});
}

CardinalSet circle_interior(const CardinalSet& s) {
  const auto& segs = s.segments();
  if (segs.empty()) return {};
  const bool has_zero = segs.front().lo == 0 && segs.front().lo_closed;
  const bool reaches_one = segs.back().hi == 1;
  if (segs.size() == 1 && has_zero && reaches_one) return s;  // the whole circle
  std::vector<Segment> out;
  for (const auto& seg : segs) {
    if (seg.is_point()) continue;
    out.push_back(Segment{seg.lo, seg.hi, false, false});
  }
  // 0 is interior when the set continues through it from both sides.
  if (has_zero && reaches_one && !segs.front().is_point() && !segs.back().is_point() && !out.empty())
    out.front().lo_closed = true;
  return CardinalSet(std::move(out));
}

bool contains_arc(const CardinalSet& s, const Arc& a) {
  // A wrapped arc splits into [lo, 1) and [0, hi]; each part must fit.
  const CardinalSet parts = arc_set(a, true);
  return std::all_of(parts.segments().begin(), parts.segments().end(),
                     [&](const Segment& seg) { return s.contains(seg); });
}

Rational minor_displacement(const Angle& from, const Angle& to) {
  const Rational d = ccw_distance(from, to);
  if (d == Rational(1, 2))
    throw AdmissibilityError("antipodal points " + to_string(from) + " and " + to_string(to) + " have no minor arc");
  return d < Rational(1, 2) ? d : Rational(d - 1);
}

Arc minor_arc(const Angle& w1, const Angle& w2) {
  if (w1 == w2) throw AdmissibilityError("minor arc of coincident points " + to_string(w1));
  const Rational d = minor_displacement(w1, w2);
  return d > 0 ? Arc(w1, w2) : Arc(w2, w1);
}

ArcAffineMap::ArcAffineMap(Arc domain, Angle s1, Angle s2, Orientation orientation)
    : domain_(std::move(domain)), s1_(std::move(s1)) {
  if (orientation == Orientation::preserve)
    displacement_ = ccw_distance(s1_, s2);
  else
    displacement_ = -ccw_distance(s2, s1_);
}

Angle ArcAffineMap::at_alpha(const Rational& alpha) const {
  return Angle(s1_.turns() + alpha * displacement_);
}

Angle ArcAffineMap::operator()(const Angle& z) const {
  if (!domain_.contains(z)) throw std::out_of_range(to_string(z) + " not on arc " + to_string(domain_));
  return at_alpha(Rational(ccw_distance(domain_.start(), z) / domain_.length()));
}

ArcAffineMap affine_on_arc(const Arc& domain, const Angle& s1, const Angle& s2, Orientation orientation) {
  return ArcAffineMap(domain, s1, s2, orientation);
}

CirclePartition::CirclePartition(std::vector<Angle> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw InputError("a circle partition needs at least 2 points");
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
    throw InputError("circle partition points must be distinct");
}

std::size_t CirclePartition::locate(const Angle& z) const {
  auto it = std::upper_bound(points_.begin(), points_.end(), z);
  if (it == points_.begin()) return points_.size() - 1;  // before z_0: last arc wraps
  return static_cast<std::size_t>(it - points_.begin()) - 1;
}

bool CirclePartition::has_point(const Angle& z) const { return std::binary_search(points_.begin(), points_.end(), z); }

CirclePartition CirclePartition::refined(const std::vector<Angle>& extra) const {
  std::vector<Angle> all = points_;
  for (const auto& e : extra)
    if (!has_point(e)) all.push_back(e);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return CirclePartition(std::move(all));
}

AdmissibleCircleMap::AdmissibleCircleMap(CirclePartition partition, std::vector<Angle> images)
    : partition_(std::move(partition)), images_(std::move(images)) {
  if (images_.size() != partition_.size())
    throw InputError("expected " + std::to_string(partition_.size()) + " images, got " +
                     std::to_string(images_.size()));
  const std::size_t k = images_.size();
  displacement_.reserve(k);
  for (std::size_t j = 0; j < k; ++j) displacement_.push_back(minor_displacement(images_[j], images_[(j + 1) % k]));
}

AdmissibleCircleMap AdmissibleCircleMap::rotation(const Rational& turns, std::size_t k) {
  std::vector<Angle> pts, imgs;
  for (std::size_t j = 0; j < k; ++j) {
    Rational t(static_cast<long>(j), static_cast<long>(k));
    t.canonicalize();
    pts.emplace_back(t);
    imgs.emplace_back(Rational(t + turns));
  }
  return AdmissibleCircleMap(CirclePartition(std::move(pts)), std::move(imgs));
}

std::vector<std::size_t> AdmissibleCircleMap::constant_arcs() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < displacement_.size(); ++j)
    if (displacement_[j] == 0) out.push_back(j);
  return out;
}

ArcAffineMap AdmissibleCircleMap::arc_map(std::size_t j) const {
  const std::size_t k = images_.size();
  return ArcAffineMap(partition_.arc(j), images_[j], images_[(j + 1) % k],
                      displacement_[j] >= 0 ? Orientation::preserve : Orientation::reverse);
}

Rational AdmissibleCircleMap::max_slope() const {
  Rational best(0);
  for (std::size_t j = 0; j < displacement_.size(); ++j) best = std::max(best, abs(slope(j)));
  return best;
}

Angle eval(const AdmissibleCircleMap& f, const Angle& z) {
  const std::size_t j = f.partition().locate(z);
  const Rational alpha = ccw_distance(f.partition().point(j), z) / f.partition().arc_length(j);
  return Angle(f.images()[j].turns() + alpha * f.displacement(j));
}

namespace {

// Points of arc j (owning [z_j, z_{j+1})) whose image lies in target.
void pull_back_arc(const AdmissibleCircleMap& f, std::size_t j, const Segment& target, std::vector<Segment>& out) {
  const Rational z = f.partition().point(j).turns();
  const Rational len = f.partition().arc_length(j);
  const Rational w = f.images()[j].turns();
  const Rational& disp = f.displacement(j);
  const Segment owned{Rational(0), Rational(1), true, false};  // alpha range
  auto emit = [&](const Segment& alpha) {
    const Segment lifted{Rational(z + alpha.lo * len), Rational(z + alpha.hi * len), alpha.lo_closed,
                         alpha.hi_closed};
    const CardinalSet wrapped = wrap_segment(lifted);
    for (const auto& s : wrapped.segments()) out.push_back(s);
  };
  if (disp == 0) {
    if (target.contains(w)) emit(owned);
    return;
  }
  for (int m = -1; m <= 1; ++m) {
    Segment t{Rational(target.lo + m - w), Rational(target.hi + m - w), target.lo_closed, target.hi_closed};
    Segment alpha{Rational(t.lo / disp), Rational(t.hi / disp), t.lo_closed, t.hi_closed};
    if (disp < 0) {
      std::swap(alpha.lo, alpha.hi);
      std::swap(alpha.lo_closed, alpha.hi_closed);
    }
    if (auto a = intersect(alpha, owned)) emit(*a);
  }
}

}  // namespace

CardinalSet preimage_set(const AdmissibleCircleMap& f, const CardinalSet& target) {
  std::vector<Segment> out;
  for (std::size_t j = 0; j < f.partition().size(); ++j)
    for (const auto& s : target.segments()) pull_back_arc(f, j, s, out);
  return CardinalSet(std::move(out));
}

CardinalSet preimage_circle(const AdmissibleCircleMap& f, const Angle& y) {
  return preimage_set(f, CardinalSet::point(y.turns()));
}

CardinalSet image_of_arc(const AdmissibleCircleMap& f, const Arc& a) {
  const std::size_t j = f.partition().locate(a.start());
  const Arc host = f.partition().arc(j);
  if (ccw_distance(host.start(), a.start()) + a.length() > host.length())
    throw std::invalid_argument("arc " + to_string(a) + " is not inside one partition arc");
  const Rational w0 = eval(f, a.start()).turns();
  const Rational travel = f.slope(j) * a.length();
  if (travel == 0) return CardinalSet::point(w0);
  Segment lifted = travel > 0 ? Segment::closed(w0, Rational(w0 + travel)) : Segment::closed(Rational(w0 + travel), w0);
  return wrap_segment(lifted);
}

CardinalSet range_set(const AdmissibleCircleMap& f) {
  std::vector<Segment> parts;
  for (std::size_t j = 0; j < f.partition().size(); ++j) {
    const CardinalSet image = image_of_arc(f, f.partition().arc(j));
    for (const auto& s : image.segments()) parts.push_back(s);
  }
  return CardinalSet(std::move(parts));
}

Cardinal max_other_fiber(const AdmissibleCircleMap& f, const Angle& x0) {
  const std::size_t k = f.partition().size();
  for (std::size_t j = 0; j < k; ++j)
    if (f.is_constant_arc(j) && f.images()[j] != x0) return Cardinal::continuum();

  // Half-open image of each non-constant arc, as segments of [0,1).
  std::vector<Segment> images;
  for (std::size_t j = 0; j < k; ++j) {
    if (f.is_constant_arc(j)) continue;
    const Rational w = f.images()[j].turns();
    const Rational& disp = f.displacement(j);
    const Segment lifted = disp > 0 ? Segment{w, Rational(w + disp), true, false}
                                    : Segment{Rational(w + disp), w, false, true};
    const CardinalSet wrapped = wrap_segment(lifted);
    for (const auto& s : wrapped.segments()) images.push_back(s);
  }
  if (images.empty()) return Cardinal::finite(0);

  std::vector<Rational> coords{Rational(0)};
  for (const auto& s : images) {
    coords.push_back(s.lo);
    if (s.hi < 1) coords.push_back(s.hi);
  }
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  const std::size_t m = coords.size();
  auto index_of = [&](const Rational& c) {
    return static_cast<std::size_t>(std::lower_bound(coords.begin(), coords.end(), c) - coords.begin());
  };
  // Slot 2i is the point coords[i]; slot 2i+1 the open gap after it (the last gap ends at 1).
  std::vector<long> diff(2 * m + 1, 0);
  for (const auto& s : images) {
    const std::size_t first = 2 * index_of(s.lo) + (s.lo_closed ? 0 : 1);
    std::size_t last;
    if (s.hi == 1)
      last = 2 * m - 1;
    else
      last = s.hi_closed ? 2 * index_of(s.hi) : 2 * index_of(s.hi) - 1;
    if (first > last) continue;
    ++diff[first];
    --diff[last + 1];
  }
  const std::size_t skip = std::binary_search(coords.begin(), coords.end(), x0.turns()) ? 2 * index_of(x0.turns())
                                                                                        : static_cast<std::size_t>(-1);
  long running = 0, best = 0;
  for (std::size_t slot = 0; slot < 2 * m; ++slot) {
    running += diff[slot];
    if (slot != skip) best = std::max(best, running);
  }
  return Cardinal::finite(static_cast<std::uint64_t>(best));
}

FiberProfile fiber_profile(const AdmissibleCircleMap& f, const Angle& x0) {
  const CardinalSet first = preimage_circle(f, x0);
  const CardinalSet second = preimage_set(f, first);
  return FiberProfile{x0.turns(), first.cardinality(), second.cardinality(), max_other_fiber(f, x0), eval(f, x0) != x0};
}

std::vector<Angle> candidate_points(const AdmissibleCircleMap& f) {
  std::vector<Angle> out;
  std::set<Angle> seen;
  auto add = [&](const Angle& a) {
    if (seen.insert(a).second) out.push_back(a);
  };
  std::vector<Angle> constants;
  for (std::size_t j : f.constant_arcs()) constants.push_back(f.images()[j]);
  for (const auto& c : constants) add(c);
  for (const auto& c : constants) add(eval(f, c));
  for (const auto& w : f.images()) add(w);
  return out;
}

CertifyOutcome certify_circle(const AdmissibleCircleMap& f) {
  std::vector<FiberProfile> profiles;
  for (const auto& x : candidate_points(f)) profiles.push_back(fiber_profile(f, x));
  return certify_profiled(profiles);
}

ComparableReal chordal_distance(const Angle& z, const Angle& w) {
  return ComparableReal::chord_of(angular_distance(z, w));
}

namespace {

Rational distance_to_integer(const Rational& x) {
  const Rational r = frac(x);
  return r <= Rational(1, 2) ? r : Rational(1 - r);
}

}  // namespace

ComparableReal sup_distance_circle(const AdmissibleCircleMap& f, const AdmissibleCircleMap& h) {
  const CirclePartition common = f.partition().refined(h.partition().points());
  const std::size_t k = common.size();
  Rational best(0);
  for (std::size_t i = 0; i < k; ++i) {
    const Angle& p = common.point(i);
    const Rational len = common.arc_length(i);
    const std::size_t jf = f.partition().locate(p);
    const std::size_t jh = h.partition().locate(p);
    const Rational d0 = eval(f, p).turns() - eval(h, p).turns();
    const Rational d1 = d0 + len * (f.slope(jf) - h.slope(jh));
    best = std::max({best, distance_to_integer(d0), distance_to_integer(d1)});
    const Rational lo = std::min(d0, d1), hi = std::max(d0, d1);
    // A half-integer inside [lo, hi] means the two maps are antipodal somewhere.
    const Rational first_half = Rational(-floor(Rational(Rational(1, 2) - lo))) + Rational(1, 2);
    if (first_half <= hi) best = Rational(1, 2);
  }
  return ComparableReal::chord_of(best);
}

}  // namespace nonroot
