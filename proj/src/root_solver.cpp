#include "nonroot/root_solver.hpp"

#include "nonroot/errors.hpp"

#include <stdexcept>

namespace nonroot {

namespace {

constexpr Point kUnassigned = static_cast<Point>(-1);

class RootSearch {
 public:
  RootSearch(const RootQuery& q)
      : f_(q.f), order_(q.order), mode_(q.mode), budget_(q.budget), g_(q.f.size(), kUnassigned) {}

  RootResult run() {
    if (propagate()) descend();
    RootResult r;
    r.explored = explored_;
    r.count = count_;
    r.witness = std::move(first_);
    r.status = r.witness ? RootStatus::found : RootStatus::none;
    return r;
  }

 private:
  // Returns true when the search should stop. Branches on the smallest
  // unassigned point, so witnesses come out in lexicographic order.
  bool descend() {
    const std::size_t n = f_.size();
    while (next_ < n && g_[next_] != kUnassigned) ++next_;
    if (next_ == n) {
      ++count_;
      if (!first_) first_ = Endofunction(g_);
      return mode_ == SearchMode::first_witness;
    }
    const Point x = next_;
    for (Point v = 0; v < n; ++v) {
      if (++explored_ > budget_) throw BudgetExceeded(explored_);
      const std::size_t mark = trail_.size();
      set(x, v);
      if (propagate() && descend()) return true;
      undo(mark);
      next_ = x;
    }
    return false;
  }

  void set(Point x, Point v) {
    g_[x] = v;
    trail_.push_back(x);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      g_[trail_.back()] = kUnassigned;
      trail_.pop_back();
    }
  }

  // Applies forced values until nothing changes; false on a contradiction.
  //   g(f(x)) = f(g(x))            since g commutes with f = g^order
  //   g^order(y) = f(y)            a chain of order-1 known steps fixes the last one
  bool propagate() {
    const std::size_t n = f_.size();
    bool changed = true;
    while (changed) {
      changed = false;
      for (Point x = 0; x < n; ++x) {
        if (g_[x] == kUnassigned) continue;
        const Point fx = f_(x), want = f_(g_[x]);
        if (g_[fx] == kUnassigned) {
          set(fx, want);
          changed = true;
        } else if (g_[fx] != want) {
          return false;
        }
      }
      for (Point y = 0; y < n; ++y) {
        Point z = y;
        std::size_t steps = 0;
        while (steps < order_ && g_[z] != kUnassigned) {
          z = g_[z];
          ++steps;
        }
        if (steps == order_) {
          if (z != f_(y)) return false;
        } else if (steps + 1 == order_) {
          set(z, f_(y));
          changed = true;
        }
      }
    }
    return true;
  }

  const Endofunction& f_;
  std::size_t order_;
  SearchMode mode_;
  std::uint64_t budget_;
  std::vector<Point> g_;
  std::vector<Point> trail_;
  Point next_ = 0;
  std::uint64_t explored_ = 0;
  std::uint64_t count_ = 0;
  std::optional<Endofunction> first_;
};

}  // namespace

RootResult find_root(const RootQuery& query) {
  if (query.order < 2) throw std::invalid_argument("find_root: order must be at least 2");
  RootSearch search(query);
  return search.run();
}

std::vector<OrderReport> has_root_up_to(const Endofunction& f, std::size_t max_order, std::uint64_t budget) {
  if (max_order < 2) throw std::invalid_argument("has_root_up_to: max order must be at least 2");
  std::vector<OrderReport> out;
  for (std::size_t n = 2; n <= max_order; ++n) {
    OrderReport rep;
    rep.order = n;
    try {
      RootResult r = find_root({f, n, SearchMode::first_witness, budget});
      rep.status = r.status == RootStatus::found ? OrderStatus::found : OrderStatus::none;
      rep.witness = std::move(r.witness);
      rep.explored = r.explored;
    } catch (const BudgetExceeded& e) {
      rep.status = OrderStatus::budget_exceeded;
      rep.explored = e.explored();
    }
    out.push_back(std::move(rep));
  }
  return out;
}

bool verify_root(const Endofunction& f, const Endofunction& g, std::size_t order) {
  if (f.size() != g.size()) throw std::invalid_argument("verify_root: size mismatch");
  return iterate(g, order) == f;
}

}  // namespace nonroot
