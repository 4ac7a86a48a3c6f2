#include "nonroot/endo.hpp"

#include "nonroot/errors.hpp"

#include <numeric>
#include <stdexcept>

namespace nonroot {

Endofunction::Endofunction(std::vector<Point> table) : table_(std::move(table)) {
  if (table_.empty()) throw InputError("endofunction must have at least one point");
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] >= table_.size())
      throw InputError("map[" + std::to_string(i) + "] = " + std::to_string(table_[i]) + " is out of range");
}

Endofunction Endofunction::identity(std::size_t n) {
  std::vector<Point> t(n);
  std::iota(t.begin(), t.end(), Point{0});
  return Endofunction(std::move(t));
}

Endofunction compose(const Endofunction& outer, const Endofunction& inner) {
  if (outer.size() != inner.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<Point> t(inner.size());
  for (Point x = 0; x < t.size(); ++x) t[x] = outer(inner(x));
  return Endofunction(std::move(t));
}

Endofunction iterate(const Endofunction& f, std::size_t k) {
  Endofunction result = Endofunction::identity(f.size());
  Endofunction base = f;
  while (k > 0) {
    if (k & 1U) result = compose(base, result);
    k >>= 1U;
    if (k > 0) base = compose(base, base);
  }
  return result;
}

FiberSet fiber(const Endofunction& f, Point x) {
  if (x >= f.size()) throw std::out_of_range("fiber: point " + std::to_string(x) + " out of range");
  FiberSet out;
  for (Point y = 0; y < f.size(); ++y)
    if (f(y) == x) out.push_back(y);
  return out;
}

FiberSet fiber2(const Endofunction& f, Point x) {
  if (x >= f.size()) throw std::out_of_range("fiber2: point " + std::to_string(x) + " out of range");
  FiberSet out;
  for (Point y = 0; y < f.size(); ++y)
    if (f(f(y)) == x) out.push_back(y);
  return out;
}

std::vector<std::size_t> fiber_sizes(const Endofunction& f) {
  std::vector<std::size_t> sizes(f.size(), 0);
  for (Point y = 0; y < f.size(); ++y) ++sizes[f(y)];
  return sizes;
}

Decomposition decompose(const Endofunction& f) {
  const std::size_t n = f.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  Decomposition d;
  d.cycle_of.assign(n, unset);
  d.depth.assign(n, 0);
  d.on_cycle.assign(n, false);

  // 0 = unvisited, 1 = on the current walk, 2 = finished
  std::vector<unsigned char> state(n, 0);
  std::vector<Point> walk;
  for (Point start = 0; start < n; ++start) {
    if (state[start] != 0) continue;
    walk.clear();
    Point x = start;
    while (state[x] == 0) {
      state[x] = 1;
      walk.push_back(x);
      x = f(x);
    }
    std::size_t tail_end = walk.size();
    if (state[x] == 1) {
      // x closes a new cycle inside the current walk
      std::size_t pos = walk.size();
      while (walk[pos - 1] != x) --pos;
      --pos;
      const std::size_t cycle = d.cycle_lengths.size();
      d.cycle_lengths.push_back(walk.size() - pos);
      for (std::size_t i = pos; i < walk.size(); ++i) {
        d.on_cycle[walk[i]] = true;
        d.cycle_of[walk[i]] = cycle;
        d.depth[walk[i]] = 0;
        state[walk[i]] = 2;
      }
      tail_end = pos;
    }
    // Tree nodes: unwind in reverse so each successor is already resolved.
    for (std::size_t i = tail_end; i-- > 0;) {
      const Point y = walk[i];
      const Point next = f(y);
      d.depth[y] = d.depth[next] + 1;
      d.cycle_of[y] = d.cycle_of[next];
      state[y] = 2;
    }
  }
  return d;
}

}  // namespace nonroot
