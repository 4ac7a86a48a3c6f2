#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace nonroot {

using Point = std::size_t;

/// Total self-map of {0, ..., n-1}; entry i of the table is f(i).
class Endofunction {
 public:
  /// Throws InputError if the table is empty or an entry is out of range.
  explicit Endofunction(std::vector<Point> table);

  static Endofunction identity(std::size_t n);

  std::size_t size() const noexcept { return table_.size(); }
  Point operator()(Point x) const { return table_[x]; }
  const std::vector<Point>& table() const noexcept { return table_; }

  friend bool operator==(const Endofunction&, const Endofunction&) = default;
  friend auto operator<=>(const Endofunction&, const Endofunction&) = default;

 private:
  std::vector<Point> table_;
};

/// Sorted, duplicate-free set of points.
using FiberSet = std::vector<Point>;

/// outer o inner. Sizes must match.
Endofunction compose(const Endofunction& outer, const Endofunction& inner);

/// f composed with itself k times; k = 0 gives the identity.
Endofunction iterate(const Endofunction& f, std::size_t k);

/// {y : f(y) = x}. Throws std::out_of_range if x >= n.
FiberSet fiber(const Endofunction& f, Point x);

/// {y : f(f(y)) = x}. Throws std::out_of_range if x >= n.
FiberSet fiber2(const Endofunction& f, Point x);

/// Fiber sizes for every point, computed in one pass.
std::vector<std::size_t> fiber_sizes(const Endofunction& f);

struct Decomposition {
  std::vector<std::size_t> cycle_lengths;  // one entry per cycle, discovery order
  std::vector<std::size_t> cycle_of;       // cycle index reached by each node
  std::vector<std::size_t> depth;          // steps until a cycle node; 0 on cycles
  std::vector<bool> on_cycle;
};

/// Cycle/tree structure of the functional graph. Iterative, so large n is fine.
Decomposition decompose(const Endofunction& f);

/// An endofunction together with optional human-readable point names.
struct LabeledEndofunction {
  Endofunction map;
  std::vector<std::string> labels;  // empty or exactly map.size() entries

  std::string label(Point x) const { return labels.empty() ? std::to_string(x) : labels[x]; }
};

}  // namespace nonroot
