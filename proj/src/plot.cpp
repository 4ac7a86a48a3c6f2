#include "nonroot/plot.hpp"

#include <sstream>

namespace nonroot {

namespace {

constexpr double kSize = 400;
constexpr double kMargin = 30;

double px(double t) { return kMargin + t * kSize; }
double py(double v) { return kMargin + (1 - v) * kSize; }

void header(std::ostringstream& s, const std::string& title) {
  const double full = kSize + 2 * kMargin;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << full << "\" height=\"" << full << "\" viewBox=\"0 0 "
    << full << ' ' << full << "\">\n";
  s << "<title>" << title << "</title>\n";
  s << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kSize << "\" height=\"" << kSize
    << "\" fill=\"none\" stroke=\"#444\"/>\n";
  s << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(1) << "\" y2=\"" << py(1)
    << "\" stroke=\"#bbb\" stroke-dasharray=\"4 4\"/>\n";
}

void segment(std::ostringstream& s, double x0, double y0, double x1, double y1) {
  s << "<line x1=\"" << px(x0) << "\" y1=\"" << py(y0) << "\" x2=\"" << px(x1) << "\" y2=\"" << py(y1)
    << "\" stroke=\"#1f4e9a\" stroke-width=\"2\"/>\n";
}

void dot(std::ostringstream& s, double x, double y, bool filled) {
  s << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\" stroke=\"#1f4e9a\" fill=\""
    << (filled ? "#1f4e9a" : "white") << "\"/>\n";
}

}  // namespace

std::string svg_interval(const PLMapInterval& f) {
  std::ostringstream s;
  header(s, "interval map");
  for (const Piece& p : f.pieces()) {
    const double x0 = to_double(p.domain.lo), x1 = to_double(p.domain.hi);
    const double y0 = to_double(p.at(p.domain.lo)), y1 = to_double(p.at(p.domain.hi));
    if (p.domain.is_point()) {
      dot(s, x0, y0, true);
      continue;
    }
    segment(s, x0, y0, x1, y1);
    dot(s, x0, y0, p.domain.lo_closed);
    dot(s, x1, y1, p.domain.hi_closed);
  }
  s << "</svg>\n";
  return s.str();
}

std::string svg_circle(const AdmissibleCircleMap& f) {
  std::ostringstream s;
  header(s, "circle map (lift)");
  const auto& part = f.partition();
  for (std::size_t j = 0; j < part.size(); ++j) {
    const Rational t0 = part.point(j).turns();
    const Rational len = part.arc_length(j);
    Rational start = f.images()[j].turns();
    const Rational& disp = f.displacement(j);
    // Walk the lifted segment, cutting it wherever the image crosses 0.
    Rational done(0);
    while (done < 1) {
      Rational stop(1);
      if (disp > 0 && start + disp * (1 - done) > 1) stop = done + (1 - start) / disp;
      if (disp < 0 && start + disp * (1 - done) < 0) stop = done + start / -disp;
      const Rational end = start + disp * (stop - done);
      double xa = to_double(t0 + len * done), xb = to_double(t0 + len * stop);
      if (xa >= 1) xa -= 1, xb -= 1;
      segment(s, xa, to_double(start), xb, to_double(end));
      done = stop;
      start = frac(end);
      if (disp < 0 && end == 0) start = 1;  // continue from the top edge
      if (disp == 0) break;
    }
    dot(s, to_double(t0), to_double(f.images()[j].turns()), true);
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace nonroot
