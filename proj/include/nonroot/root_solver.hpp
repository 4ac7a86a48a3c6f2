#pragma once

#include "nonroot/endo.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace nonroot {

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

enum class SearchMode {
  first_witness,
  count_all,  // exponential; meant for small instances only
};

struct RootQuery {
  Endofunction f;
  std::size_t order = 2;
  SearchMode mode = SearchMode::first_witness;
  std::uint64_t budget = kDefaultSearchBudget;
};

enum class RootStatus { found, none };

struct RootResult {
  RootStatus status = RootStatus::none;
  std::optional<Endofunction> witness;  // lexicographically smallest root
  std::uint64_t explored = 0;           // search nodes expanded
  std::uint64_t count = 0;              // number of roots; count_all mode only
};

/// Exhaustive depth-first search for g with g^order = f.
///
/// g is assigned point by point in index order with candidate values in
/// ascending order, so the first complete assignment is the lexicographically
/// smallest root. After every choice two necessary conditions are propagated
/// to a fixpoint: g(f(x)) = f(g(x)) (g commutes with g^order), which fixes
/// g(f(x)) once g(x) is known, and g^order(y) = f(y), which fixes the last
/// step of a chain once the first order-1 steps are known. Contradictions
/// prune the branch.
///
/// Throws std::invalid_argument if order < 2, BudgetExceeded when the node
/// budget runs out before the search is exhausted.
RootResult find_root(const RootQuery& query);

enum class OrderStatus { found, none, budget_exceeded };

struct OrderReport {
  std::size_t order = 0;
  OrderStatus status = OrderStatus::none;
  std::optional<Endofunction> witness;
  std::uint64_t explored = 0;
};

/// find_root for every order 2..max_order; budget errors are reported per order.
std::vector<OrderReport> has_root_up_to(const Endofunction& f, std::size_t max_order,
                                        std::uint64_t budget = kDefaultSearchBudget);

/// iterate(g, order) == f. Throws std::invalid_argument on size mismatch.
bool verify_root(const Endofunction& f, const Endofunction& g, std::size_t order);

}  // namespace nonroot
