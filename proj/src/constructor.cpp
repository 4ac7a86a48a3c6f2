#include "nonroot/constructor.hpp"

#include "nonroot/errors.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>

namespace nonroot {

namespace {

void require_epsilon(const Rational& eps) {
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("epsilon must lie in (0,1), got " + to_string(eps));
}

bool subset(const CardinalSet& a, const CardinalSet& b) {
  return std::all_of(a.segments().begin(), a.segments().end(), [&](const Segment& s) { return b.contains(s); });
}

bool disjoint(const CardinalSet& a, const CardinalSet& b) {
  return std::none_of(a.segments().begin(), a.segments().end(), [&](const Segment& s) { return b.intersects(s); });
}

Rational pow2_inverse(unsigned p) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, p);
  return Rational(mpz_class(1), den);
}

bool chord_below(const Angle& a, const Angle& b, const Rational& bound) {
  return chordal_distance(a, b).less_than(bound);
}

// Circle search state shared by the window and flat-arc steps.
struct Window {
  Angle a;
  Rational rho;
  std::size_t r = 0;
  std::size_t r_prime = 0;
};

std::optional<Window> window_conditions_hold(const AdmissibleCircleMap& f0, const CardinalSet& range_interior,
                                             const Angle& a, const Rational& rho, std::size_t r,
                                             std::size_t r_prime) {
  const CirclePartition& grid = f0.partition();
  const Angle u0(a.turns() - rho), u1(a.turns() + rho);
  const Arc window(u0, u1);
  const Rational len = grid.arc_length(r);
  const Rational off0 = ccw_distance(grid.point(r), u0);
  const Rational off1 = ccw_distance(grid.point(r), u1);
  if (!(off0 > 0 && off1 < len && off0 < off1)) return std::nullopt;  // (b)
  if (!contains_arc(range_interior, window)) return std::nullopt;     // (a)
  const CardinalSet image = image_of_arc(f0, window);
  if (!subset(image, arc_set(grid.arc(r_prime), false))) return std::nullopt;  // (c)
  const CardinalSet window_set = arc_set(window);
  if (!disjoint(image, window_set)) return std::nullopt;  // (d)
  if (!disjoint(preimage_set(f0, window_set), window_set)) return std::nullopt;  // (e)
  return Window{a, rho, r, r_prime};
}

}  // namespace

Rational continuity_delta(const AdmissibleCircleMap& h, const Rational& eps) {
  require_epsilon(eps);
  const Rational lambda = h.max_slope();
  const Rational cap(1, 5);
  Rational bound = lambda == 0 ? cap : Rational(7 * eps / (110 * lambda));
  if (bound > cap) bound = cap;
  return dyadic_floor(bound, 3);
}

bool agree_outside(const AdmissibleCircleMap& f, const AdmissibleCircleMap& g, const Arc& arc) {
  const CirclePartition common =
      f.partition().refined(g.partition().points()).refined({arc.start(), arc.end()});
  for (std::size_t i = 0; i < common.size(); ++i) {
    const Angle& p = common.point(i);
    const Rational len = common.arc_length(i);
    const Angle mid(p.turns() + len / 2);
    if (arc.contains_open(mid)) continue;
    if (eval(f, p) != eval(g, p)) return false;
    if (f.slope(f.partition().locate(p)) != g.slope(g.partition().locate(p))) return false;
  }
  return true;
}

CircleConstruction construct_non_iterate(const AdmissibleCircleMap& h, const Rational& eps) {
  const Rational delta = continuity_delta(h, eps);

  // Uniform grid of mesh 1/k with 2 pi / k < delta / 2.
  const mpz_class k_big = mpz_class(14) * delta.get_den() / delta.get_num();
  const std::size_t k = k_big.get_ui() + (k_big * delta.get_num() == 14 * delta.get_den() ? 0 : 1);
  std::vector<Angle> points;
  points.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    Rational t(mpz_class(static_cast<unsigned long>(j)), mpz_class(static_cast<unsigned long>(k)));
    t.canonicalize();
    points.emplace_back(t);
  }
  CirclePartition grid(points);

  // Perturbed images: offsets +eta, -eta, +eta/2, ... until w_j != z_j and new.
  const Rational eta = dyadic_floor(Rational(eps / 280));
  std::vector<Angle> images;
  images.reserve(k);
  std::set<Angle> used;
  for (std::size_t j = 0; j < k; ++j) {
    const Rational base = eval(h, grid.point(j)).turns();
    std::optional<Angle> chosen;
    Rational step = eta;
    for (int halving = 0; halving < 40 && !chosen; ++halving, step /= 2) {
      for (int sign : {1, -1}) {
        const Angle w(base + sign * step);
        if (w != grid.point(j) && !used.count(w)) {
          chosen = w;
          break;
        }
      }
    }
    if (!chosen) throw ConstructionFailure("grid images", "no admissible perturbation at z_" + std::to_string(j));
    used.insert(*chosen);
    images.push_back(*chosen);
  }
  AdmissibleCircleMap f0(grid, images);
  const CardinalSet range_interior = circle_interior(range_set(f0));

  // Window J = [a - rho, a + rho] around a point a moved by f0.
  for (unsigned q = 1; q <= 12; ++q) {
    const Rational frac_step = pow2_inverse(q);
    for (std::size_t r = 0; r < k; ++r) {
      const Rational len = grid.arc_length(r);
      for (unsigned long i = 1; i < (1UL << q); i += 2) {
        const Angle a(grid.point(r).turns() + len * frac_step * static_cast<long>(i));
        const Angle fa = eval(f0, a);
        if (fa == a || !range_interior.contains(a.turns()) || grid.has_point(fa)) continue;
        const std::size_t r_prime = grid.locate(fa);
        for (unsigned p = q + 1; p <= q + 40; ++p) {
          const Rational rho = len * pow2_inverse(p);
          const auto win = window_conditions_hold(f0, range_interior, a, rho, r, r_prime);
          if (!win) continue;

          const Angle u0(a.turns() - rho), u1(a.turns() + rho);
          Angle y0(a.turns() - rho / 2), y1(a.turns() + rho / 2);
          Angle x0 = eval(f0, y0), x1 = eval(f0, y1);
          bool swapped = false;
          if (eval(f0, x0) == x0) {
            std::swap(x0, x1);
            swapped = true;
          }
          if (eval(f0, x0) == x0 || x0 == x1) continue;

          CirclePartition refined = grid.refined({u0, y0, y1, u1});
          std::vector<Angle> values;
          values.reserve(refined.size());
          for (const Angle& z : refined.points()) values.push_back(z == y0 || z == y1 ? x0 : eval(f0, z));
          AdmissibleCircleMap f(refined, values);

          const FiberProfile profile = fiber_profile(f, x0);
          const std::array<FiberProfile, 1> profiles{profile};
          const CertifyOutcome outcome = certify_profiled(profiles);
          if (!outcome.certificate || outcome.certificate->kind != CertificateCase::C3)
            throw ConstructionFailure("certificate", "flattened map at x0=" + to_string(x0) + " is not certified C3");
          if (!sup_distance_circle(f, h).less_than(eps))
            throw ConstructionFailure("sup distance", "constructed map is not within epsilon of h");

          ConstructionTrace trace{
              .epsilon = eps,
              .delta = delta,
              .grid = grid,
              .grid_images = images,
              .approximant = f0,
              .window = Arc(u0, u1),
              .moved_point = a,
              .flat_arc = Arc(y0, y1),
              .flat_value = x0,
              .other_end = x1,
              .window_arc = r,
              .image_arc = r_prime,
              .endpoint_swapped = swapped,
              .refined = refined,
              .result = f,
          };
          return CircleConstruction{f, std::move(trace), *outcome.certificate};
        }
      }
    }
  }
  throw ConstructionFailure("window", "no arc J satisfying the separation conditions on the search grid");
}

std::vector<TraceCheck> check_trace(const AdmissibleCircleMap& h, const ConstructionTrace& t) {
  std::vector<TraceCheck> out;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    out.push_back({std::move(name), ok, std::move(detail)});
  };
  const Rational& eps = t.epsilon;
  const CirclePartition& grid = t.grid;
  const std::size_t k = grid.size();

  const bool shaped = t.grid_images.size() == k && t.window_arc < k && t.image_arc < k;
  add("trace shape", shaped, "grid " + std::to_string(k) + ", images " + std::to_string(t.grid_images.size()));
  if (!shaped) return out;
  add("epsilon in (0,1)", eps > 0 && eps < 1, to_string(eps));
  add("delta in (0,1/4)", t.delta > 0 && t.delta < Rational(1, 4), to_string(t.delta));
  {
    // pi < 22/7, so (22/7) * L * delta / 2 < eps/10 bounds the chordal image spread.
    const Rational spread = Rational(22, 7) * h.max_slope() * t.delta / 2;
    add("delta continuity bound", spread < eps / 10, "bound " + to_string(spread));
  }

  bool mesh = true, close = true, moved = true, spacing = true;
  for (std::size_t j = 0; j < k; ++j) {
    const Angle& z = grid.point(j);
    const Angle& w = t.grid_images[j];
    mesh = mesh && chord_below(z, grid.point((j + 1) % k), Rational(t.delta / 2));
    close = close && chord_below(eval(h, z), w, Rational(eps / 20));
    moved = moved && w != z;
    spacing = spacing && chord_below(w, t.grid_images[(j + 1) % k], Rational(eps / 5));
  }
  std::set<Angle> distinct(t.grid_images.begin(), t.grid_images.end());
  add("mesh < delta/2", mesh);
  add("|h(z_j) - w_j| < eps/20", close);
  add("w_j != z_j", moved);
  add("w_j distinct", distinct.size() == t.grid_images.size() && t.grid_images.size() == k);
  add("|w_{j+1} - w_j| < eps/5", spacing);
  add("epsilon chain", eps / 20 + eps / 10 + eps / 20 == eps / 5 && eps / 5 + eps / 20 + eps / 10 < eps / 2 &&
                           eps / 5 + eps / 2 < 4 * eps / 5);
  add("approximant interpolates grid images",
      t.approximant.partition() == grid && t.approximant.images() == t.grid_images);

  const AdmissibleCircleMap& f0 = t.approximant;
  const CardinalSet window_set = arc_set(t.window);
  const Arc& jr = grid.arc(t.window_arc);
  const bool window_in_arc = jr.contains_open(t.window.start()) && jr.contains_open(t.window.end()) &&
                             ccw_distance(jr.start(), t.window.start()) < ccw_distance(jr.start(), t.window.end());
  add("(a) J in interior of range(f0)", contains_arc(circle_interior(range_set(f0)), t.window));
  add("(b) J inside open arc J_r", window_in_arc);
  if (window_in_arc) {
    const CardinalSet image = image_of_arc(f0, t.window);
    add("(c) f0(J) inside open arc J_r'", subset(image, arc_set(grid.arc(t.image_arc), false)));
    add("(d) f0(J) disjoint from J", disjoint(image, window_set));
  } else {
    add("(c) f0(J) inside open arc J_r'", false, "J not inside a single grid arc");
    add("(d) f0(J) disjoint from J", false, "J not inside a single grid arc");
  }
  add("(e) f0^-1(J) disjoint from J", disjoint(preimage_set(f0, window_set), window_set));
  add("a in J, f0(a) != a", t.window.contains_open(t.moved_point) && eval(f0, t.moved_point) != t.moved_point);

  const Angle& y0 = t.flat_arc.start();
  const Angle& y1 = t.flat_arc.end();
  const bool k_inside = t.window.contains_open(y0) && t.window.contains_open(y1) &&
                        ccw_distance(t.window.start(), y0) < ccw_distance(t.window.start(), y1);
  add("K inside open J", k_inside);
  const std::set<Angle> ends{eval(f0, y0), eval(f0, y1)};
  add("f0(K) = [x0, x1], x0 != x1",
      t.flat_value != t.other_end && ends == std::set<Angle>{t.flat_value, t.other_end});
  add("f0(x0) != x0", eval(f0, t.flat_value) != t.flat_value);
  add("swap branch recorded", t.endpoint_swapped == (eval(f0, y0) != t.flat_value));

  const auto& rp = t.refined.points();
  const bool refines = std::all_of(grid.points().begin(), grid.points().end(),
                                   [&](const Angle& z) { return t.refined.has_point(z); });
  add("Q refines P", refines && t.result.partition() == t.refined);
  add("(f) f agrees with f0 off J", agree_outside(t.result, f0, t.window));
  bool flat = t.refined.has_point(y0) && t.refined.has_point(y1);
  if (flat) {
    const std::size_t i0 = t.refined.locate(y0);
    flat = t.refined.point((i0 + 1) % rp.size()) == y1 && t.result.is_constant_arc(i0) &&
           eval(t.result, y0) == t.flat_value;
  }
  add("f constant x0 on K", flat);
  add("f(x0) != x0", eval(t.result, t.flat_value) != t.flat_value);

  add("sup |f0 - h| < eps/2", sup_distance_circle(f0, h).less_than(Rational(eps / 2)));
  add("sup |f - f0| < eps/5", sup_distance_circle(t.result, f0).less_than(Rational(eps / 5)));
  add("sup |f - h| < 4 eps/5", sup_distance_circle(t.result, h).less_than(Rational(4 * eps / 5)));
  return out;
}

namespace {

// Blend of h with x/2 + 1/4; the second map has slope 1/2 everywhere.
PLMapInterval blend(const PLMapInterval& h, const Rational& lambda) {
  std::vector<Piece> pieces;
  for (const Piece& p : h.pieces())
    pieces.push_back({p.domain, Rational((1 - lambda) * p.slope + lambda / 2),
                      Rational((1 - lambda) * p.intercept + lambda / 4)});
  return PLMapInterval(std::move(pieces));
}

bool has_flat_piece(const PLMapInterval& f) {
  return std::any_of(f.pieces().begin(), f.pieces().end(),
                     [](const Piece& p) { return p.is_constant() && !p.domain.is_point(); });
}

Piece line_through(const Segment& domain, const Rational& x0, const Rational& v0, const Rational& x1,
                   const Rational& v1) {
  const Rational slope = (v1 - v0) / (x1 - x0);
  return {domain, slope, Rational(v0 - slope * x0)};
}

}  // namespace

IntervalConstruction construct_non_iterate_interval(const PLMapInterval& h, const Rational& eps) {
  require_epsilon(eps);
  if (!h.is_continuous()) throw InputError("interval construction needs a continuous map");

  Rational lambda = dyadic_floor(Rational(eps / 4));
  std::optional<PLMapInterval> approx;
  for (int tries = 0; tries < 64; ++tries, lambda /= 2) {
    PLMapInterval candidate = blend(h, lambda);
    if (!has_flat_piece(candidate)) {
      approx = std::move(candidate);
      break;
    }
  }
  if (!approx) throw ConstructionFailure("blend", "every blend weight leaves a constant piece");
  const PLMapInterval& f0 = *approx;

  std::vector<Segment> image_parts;
  for (const Piece& p : f0.pieces()) image_parts.push_back(p.image());
  const CardinalSet range(image_parts);

  for (unsigned q = 1; q <= 16; ++q) {
    const Rational unit = pow2_inverse(q);
    for (unsigned long i = 1; i < (1UL << q); i += 2) {
      const Rational a = unit * static_cast<long>(i);
      if (eval(f0, a) == a) continue;
      // K must sit inside the range of f0 so that f^-1(K) contains an interval.
      bool interior = false;
      for (const Segment& s : range.segments())
        if (s.lo < a && a < s.hi) interior = true;
      if (!interior) continue;
      const Piece& host = f0.pieces()[f0.locate(a)];
      for (unsigned p = q + 1; p <= q + 30; ++p) {
        const Rational rho = pow2_inverse(p);
        const Rational u0 = a - rho, u1 = a + rho;
        const Rational y0 = a - rho / 2, y1 = a + rho / 2;
        if (u0 <= host.domain.lo || u1 >= host.domain.hi) continue;
        for (const Rational& end : {y0, y1}) {
          const Rational x0 = host.at(end);
          std::vector<Piece> pieces;
          for (const Piece& piece : f0.pieces()) {
            if (&piece != &host) {
              pieces.push_back(piece);
              continue;
            }
            const Segment& d = piece.domain;
            pieces.push_back({Segment{d.lo, u0, d.lo_closed, true}, piece.slope, piece.intercept});
            pieces.push_back(line_through(Segment::open(u0, y0), u0, piece.at(u0), y0, x0));
            pieces.push_back({Segment::closed(y0, y1), Rational(0), x0});
            pieces.push_back(line_through(Segment::open(y1, u1), y1, x0, u1, piece.at(u1)));
            pieces.push_back({Segment{u1, d.hi, true, d.hi_closed}, piece.slope, piece.intercept});
          }
          PLMapInterval f(std::move(pieces));
          if (eval(f, x0) == x0) continue;
          const std::array<FiberProfile, 1> profiles{fiber_profile(f, x0)};
          const CertifyOutcome outcome = certify_profiled(profiles);
          if (!outcome.certificate || outcome.certificate->kind != CertificateCase::C3) continue;
          const Rational dist = sup_distance(f, h);
          if (dist >= eps) continue;
          return IntervalConstruction{f,
                                      f0,
                                      lambda,
                                      Segment::closed(u0, u1),
                                      Segment::closed(y0, y1),
                                      x0,
                                      dist,
                                      *outcome.certificate};
        }
      }
    }
  }
  throw ConstructionFailure("flat interval", "no sub-interval K with a certified flattening on the search grid");
}

}  // namespace nonroot
