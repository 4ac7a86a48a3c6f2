#pragma once

#include "nonroot/cardinal.hpp"
#include "nonroot/endo.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace nonroot {

using Index = std::int64_t;

/// {j : lo <= j <= hi}, or the ray {j : j >= lo} when hi is absent.
struct IndexRange {
  Index lo = 0;
  std::optional<Index> hi;

  static IndexRange finite(Index lo, Index hi) { return {lo, hi}; }
  static IndexRange ray(Index lo) { return {lo, std::nullopt}; }
  bool is_ray() const { return !hi.has_value(); }
  bool empty() const { return hi && *hi < lo; }
  bool contains(Index j) const { return j >= lo && (!hi || j <= *hi); }
  bool contains(const IndexRange& other) const;
  Cardinal size() const;
  IndexRange shifted(Index c) const;
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

std::optional<IndexRange> intersect(const IndexRange& a, const IndexRange& b);
std::string to_string(const IndexRange& r);

struct Family {
  std::string label;
  IndexRange indices;
  friend bool operator==(const Family&, const Family&) = default;
};

struct RayPoint {
  std::string label;
  Index index = 0;
  friend auto operator<=>(const RayPoint&, const RayPoint&) = default;
};

std::string to_string(const RayPoint& p);

/// Disjoint labelled families of integer-indexed points, e.g. x_j for j >= -12.
class RayDomain {
 public:
  /// Throws InputError on repeated labels or empty index sets.
  explicit RayDomain(std::vector<Family> families);
  const std::vector<Family>& families() const noexcept { return families_; }
  const Family* find(const std::string& label) const;
  bool contains(const RayPoint& p) const;
  friend bool operator==(const RayDomain&, const RayDomain&) = default;

 private:
  std::vector<Family> families_;
};

/// j |-> j + offset inside family `target`.
struct Shift {
  std::string target;
  Index offset = 0;
  friend bool operator==(const Shift&, const Shift&) = default;
};

/// Everything goes to target_index inside family `target`.
struct Const {
  std::string target;
  Index index = 0;
  friend bool operator==(const Const&, const Const&) = default;
};

using RayAction = std::variant<Shift, Const>;

struct RayRule {
  std::string source;
  IndexRange guard;
  RayAction action;
  friend bool operator==(const RayRule&, const RayRule&) = default;
};

/// A self-map of a RayDomain given by shift and constant rules.
class RayMap {
 public:
  /// Throws InputError unless the guards of each family are disjoint, cover
  /// the family, and every action lands inside its target family.
  RayMap(RayDomain domain, std::vector<RayRule> rules);
  static RayMap identity(const RayDomain& domain);

  const RayDomain& domain() const noexcept { return domain_; }
  const std::vector<RayRule>& rules() const noexcept { return rules_; }
  /// Rule whose guard contains the point. Throws std::out_of_range if none.
  const RayRule& rule_for(const RayPoint& p) const;
  RayPoint operator()(const RayPoint& p) const;

 private:
  RayDomain domain_;
  std::vector<RayRule> rules_;
};

/// outer o inner, guards split so each output rule has a single action.
/// Throws InputError if the domains differ or a split leaves a gap.
RayMap ray_compose(const RayMap& outer, const RayMap& inner);

/// Pointwise equality, decided on the common refinement of both guard lists.
bool ray_equal(const RayMap& f, const RayMap& g);

/// #f^-1(p). Throws std::out_of_range if p is not in the domain.
Cardinal ray_fiber_cardinal(const RayMap& f, const RayPoint& p);

/// sup over points p != exclude of #f^-1(p). Fiber counts are piecewise
/// constant in the index, so checking every guard boundary (and its
/// neighbours) is exhaustive.
Cardinal ray_max_other_fiber(const RayMap& f, const RayPoint& exclude);

/// A finite window of a RayMap as an ordinary endofunction. Points whose image
/// falls outside the window are sent to themselves and flagged in `defined`.
struct Materialized {
  LabeledEndofunction map;
  std::vector<RayPoint> points;
  std::vector<bool> defined;
  std::optional<Point> index_of(const RayPoint& p) const;
};

/// Rays are cut at `upper`; finite families are kept whole.
Materialized materialize(const RayMap& f, Index upper);

// ---------------------------------------------------------------- blocks

enum class BlockKind { cantor, point };
enum class Measure { zero, positive };
enum class ArrowKind { bijection, constant };

struct Block {
  std::string label;
  BlockKind kind = BlockKind::point;
  Measure measure = Measure::zero;
};

struct Arrow {
  std::string target;
  ArrowKind kind = ArrowKind::constant;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A map between opaque blocks: Cantor blocks move to Cantor blocks by
/// homeomorphisms, anything can collapse onto a point block.
class BlockSystem {
 public:
  /// Throws InputError when an arrow is missing, dangles, or has the wrong
  /// kind for its endpoints.
  BlockSystem(std::vector<Block> blocks, std::map<std::string, Arrow> arrows);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const std::map<std::string, Arrow>& arrows() const noexcept { return arrows_; }
  const Block& block(const std::string& label) const;
  const Arrow& arrow(const std::string& label) const { return arrows_.at(label); }

  /// Blocks B with self(B) inside target (whole blocks, since arrows are onto).
  std::vector<std::string> preimage(const std::string& target) const;
  /// Positive iff a positive-measure block collapses onto the point `target`.
  /// Fibers of points inside a Cantor block meet each block at most once.
  Measure fiber_measure(const std::string& target) const;

 private:
  std::vector<Block> blocks_;
  std::map<std::string, Arrow> arrows_;
};

BlockSystem block_compose(const BlockSystem& outer, const BlockSystem& inner);

/// The square root g: C^ -> C1 -> C2 -> C3 -> x0 -> x1 -> x2 -> x3 -> x0.
BlockSystem ex4_root_system();

struct BlockCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct BlockReport {
  std::vector<BlockCheck> checks;
  bool all_passed() const;
};

/// Five checks on f = g o g: the arrows of f match the two expected chains,
/// f(x0) = x2 != x0, the positive-measure part of f^-2(x0) is exactly C^,
/// every other point fiber has measure zero, and the measure analogue of the
/// cardinality criterion would therefore wrongly exclude a square root.
BlockReport block_verify(const BlockSystem& g);
BlockReport block_verify_ex4();

}  // namespace nonroot
