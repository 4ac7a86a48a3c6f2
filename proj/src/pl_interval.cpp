#include "nonroot/pl_interval.hpp"

#include "nonroot/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nonroot {

Segment Piece::image() const {
  if (slope == 0) return Segment::point(intercept);
  Segment s{at(domain.lo), at(domain.hi), domain.lo_closed, domain.hi_closed};
  if (slope < 0) {
    std::swap(s.lo, s.hi);
    std::swap(s.lo_closed, s.hi_closed);
  }
  return s;
}

std::optional<Segment> Piece::preimage(const Segment& target) const {
  if (domain.empty() || target.empty()) return std::nullopt;
  if (slope == 0) {
    if (target.contains(intercept)) return domain;
    return std::nullopt;
  }
  Segment pulled{Rational((target.lo - intercept) / slope), Rational((target.hi - intercept) / slope),
                 target.lo_closed, target.hi_closed};
  if (slope < 0) {
    std::swap(pulled.lo, pulled.hi);
    std::swap(pulled.lo_closed, pulled.hi_closed);
  }
  return intersect(pulled, domain);
}

namespace {

bool lo_before(const Segment& a, const Segment& b) {
  if (a.lo != b.lo) return a.lo < b.lo;
  return a.lo_closed && !b.lo_closed;
}

std::vector<Piece> normalize(std::vector<Piece> in) {
  // Absorb point pieces into a neighbour whose formula gives the same value.
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (!in[i].domain.is_point()) continue;
    const Rational& p = in[i].domain.lo;
    const Rational v = in[i].intercept + in[i].slope * p;
    if (i > 0 && in[i - 1].domain.hi == p && !in[i - 1].domain.hi_closed && in[i - 1].at(p) == v) {
      in[i - 1].domain.hi_closed = true;
      in.erase(in.begin() + static_cast<std::ptrdiff_t>(i));
      --i;
    } else if (i + 1 < in.size() && in[i + 1].domain.lo == p && !in[i + 1].domain.lo_closed &&
               in[i + 1].at(p) == v) {
      in[i + 1].domain.lo_closed = true;
      in.erase(in.begin() + static_cast<std::ptrdiff_t>(i));
      --i;
    }
  }
  std::vector<Piece> out;
  for (auto& p : in) {
    if (!out.empty() && out.back().slope == p.slope && out.back().intercept == p.intercept) {
      out.back().domain.hi = p.domain.hi;
      out.back().domain.hi_closed = p.domain.hi_closed;
      continue;
    }
    // A point piece with the formula of its neighbour is a leftover of merging.
    out.push_back(std::move(p));
  }
  for (auto& p : out) {
    if (p.slope == 0 && p.domain.is_point()) continue;
    if (p.domain.is_point()) {
      // canonical form for point pieces: constant formula
      p.intercept = p.at(p.domain.lo);
      p.slope = 0;
    }
  }
  // Canonical point pieces may now equal a neighbour's constant formula.
  std::vector<Piece> merged;
  for (auto& p : out) {
    if (!merged.empty() && merged.back().slope == p.slope && merged.back().intercept == p.intercept) {
      merged.back().domain.hi = p.domain.hi;
      merged.back().domain.hi_closed = p.domain.hi_closed;
      continue;
    }
    merged.push_back(std::move(p));
  }
  return merged;
}

}  // namespace

PLMapInterval::PLMapInterval(std::vector<Piece> pieces) {
  if (pieces.empty()) throw InputError("piecewise map needs at least one piece");
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return lo_before(a.domain, b.domain); });
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Segment& d = pieces[i].domain;
    if (d.empty()) throw InputError("piece " + std::to_string(i) + " has an empty domain " + to_string(d));
  }
  if (pieces.front().domain.lo != 0 || !pieces.front().domain.lo_closed)
    throw InputError("pieces must start at the closed endpoint 0");
  if (pieces.back().domain.hi != 1 || !pieces.back().domain.hi_closed)
    throw InputError("pieces must end at the closed endpoint 1");
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    Segment& a = pieces[i].domain;
    Segment& b = pieces[i + 1].domain;
    if (a.hi != b.lo)
      throw InputError("pieces " + std::to_string(i) + " and " + std::to_string(i + 1) + " leave a gap or overlap");
    if (a.hi_closed && b.lo_closed) {
      if (pieces[i].at(a.hi) != pieces[i + 1].at(b.lo))
        throw InputError("pieces " + std::to_string(i) + " and " + std::to_string(i + 1) +
                         " both contain " + to_string(a.hi) + " with different values");
      if (b.is_point()) {
        a.hi_closed = true;
        b.lo_closed = false;  // now empty; dropped below
      } else {
        b.lo_closed = false;
      }
    } else if (!a.hi_closed && !b.lo_closed) {
      throw InputError("point " + to_string(a.hi) + " is not covered by any piece");
    }
  }
  std::erase_if(pieces, [](const Piece& p) { return p.domain.empty(); });
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Segment img = pieces[i].image();
    if (img.lo < 0 || img.hi > 1)
      throw InputError("piece " + std::to_string(i) + " maps outside [0,1]: image " + to_string(img));
  }
  pieces_ = normalize(std::move(pieces));
}

PLMapInterval PLMapInterval::identity() { return PLMapInterval({Piece{Segment::closed(0, 1), 1, 0}}); }

PLMapInterval PLMapInterval::constant(const Rational& value) {
  return PLMapInterval({Piece{Segment::closed(0, 1), 0, value}});
}

std::size_t PLMapInterval::locate(const Rational& x) const {
  if (x < 0 || x > 1) throw std::out_of_range("point " + to_string(x) + " outside [0,1]");
  // First piece whose domain does not lie entirely before x.
  auto it = std::partition_point(pieces_.begin(), pieces_.end(), [&](const Piece& p) {
    return p.domain.hi < x || (p.domain.hi == x && !p.domain.hi_closed);
  });
  return static_cast<std::size_t>(it - pieces_.begin());
}

bool PLMapInterval::is_continuous() const {
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
    const Rational& p = pieces_[i].domain.hi;
    if (pieces_[i].at(p) != pieces_[i + 1].at(p)) return false;
  }
  return true;
}

Rational eval(const PLMapInterval& f, const Rational& x) { return f.pieces()[f.locate(x)].at(x); }

PLMapInterval compose(const PLMapInterval& outer, const PLMapInterval& inner) {
  std::vector<Piece> out;
  for (const Piece& g : inner.pieces()) {
    for (const Piece& f : outer.pieces()) {
      auto d = g.preimage(f.domain);
      if (!d) continue;
      out.push_back(Piece{*d, Rational(f.slope * g.slope), Rational(f.slope * g.intercept + f.intercept)});
    }
  }
  return PLMapInterval(std::move(out));
}

CardinalSet preimage_set(const PLMapInterval& f, const CardinalSet& target) {
  std::vector<Segment> parts;
  for (const Piece& p : f.pieces())
    for (const Segment& s : target.segments())
      if (auto d = p.preimage(s)) parts.push_back(*d);
  return CardinalSet(std::move(parts));
}

CardinalSet preimage_point(const PLMapInterval& f, const Rational& y) {
  return preimage_set(f, CardinalSet::point(y));
}

CardinalSet preimage2_point(const PLMapInterval& f, const Rational& y) {
  return preimage_set(f, preimage_point(f, y));
}

Cardinal max_other_fiber(const PLMapInterval& f, const Rational& x0) {
  std::set<Rational> critical{Rational(0), Rational(1)};
  for (const Piece& p : f.pieces()) {
    if (p.is_constant() && !p.domain.is_point() && p.intercept != x0) return Cardinal::continuum();
    critical.insert(p.at(p.domain.lo));
    critical.insert(p.at(p.domain.hi));
  }
  std::vector<Rational> samples;
  const std::vector<Rational> c(critical.begin(), critical.end());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] > 1) continue;
    samples.push_back(c[i]);
    if (i + 1 < c.size()) {
      Rational mid = (c[i] + c[i + 1]) / 2;
      if (mid == x0) mid = (2 * c[i] + c[i + 1]) / 3;
      samples.push_back(mid);
    }
  }
  Cardinal best = Cardinal::finite(0);
  for (const auto& y : samples) {
    if (y == x0) continue;
    best = std::max(best, preimage_point(f, y).cardinality());
  }
  return best;
}

FiberProfile fiber_profile(const PLMapInterval& f, const Rational& x0) {
  if (x0 < 0 || x0 > 1) throw std::out_of_range("candidate " + to_string(x0) + " outside [0,1]");
  const CardinalSet first = preimage_point(f, x0);
  const CardinalSet second = preimage_set(f, first);
  return FiberProfile{x0, first.cardinality(), second.cardinality(), max_other_fiber(f, x0), eval(f, x0) != x0};
}

std::vector<Rational> candidate_points(const PLMapInterval& f) {
  std::vector<Rational> out;
  std::set<Rational> seen;
  auto add = [&](const Rational& x) {
    if (seen.insert(x).second) out.push_back(x);
  };
  std::vector<Rational> constants;
  for (const Piece& p : f.pieces())
    if (p.is_constant() && !p.domain.is_point()) constants.push_back(p.intercept);
  for (const auto& c : constants) add(c);
  for (const auto& c : constants) add(eval(f, c));
  for (const Piece& p : f.pieces()) {
    add(eval(f, p.domain.lo));
    add(eval(f, p.domain.hi));
  }
  return out;
}

CertifyOutcome certify_pl(const PLMapInterval& f) {
  std::vector<FiberProfile> profiles;
  for (const auto& x : candidate_points(f)) profiles.push_back(fiber_profile(f, x));
  return certify_profiled(profiles);
}

Rational sup_distance(const PLMapInterval& f, const PLMapInterval& g) {
  std::set<Rational> cuts;
  for (const auto* m : {&f, &g})
    for (const Piece& p : m->pieces()) {
      cuts.insert(p.domain.lo);
      cuts.insert(p.domain.hi);
    }
  const std::vector<Rational> b(cuts.begin(), cuts.end());
  Rational best(0);
  for (const auto& x : b) best = std::max(best, abs(Rational(eval(f, x) - eval(g, x))));
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    const Rational mid = (b[i] + b[i + 1]) / 2;
    const Piece& pf = f.pieces()[f.locate(mid)];
    const Piece& pg = g.pieces()[g.locate(mid)];
    best = std::max(best, abs(Rational(pf.at(b[i]) - pg.at(b[i]))));
    best = std::max(best, abs(Rational(pf.at(b[i + 1]) - pg.at(b[i + 1]))));
  }
  return best;
}

}  // namespace nonroot
