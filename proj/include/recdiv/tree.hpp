#pragma once

#include "recdiv/bigcount.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace recdiv {

/// A square of side `side` with one child per proper divisor of `side`,
/// children in decreasing side order. The whole tree has kappa0(side) nodes,
/// K(side) of them of side 1 (for side >= 2).
struct DivisorTree {
  std::uint64_t side = 1;
  std::vector<DivisorTree> children;

  friend bool operator==(const DivisorTree&, const DivisorTree&) = default;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000;

/// Thrown by build_tree when the tree would exceed its node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t n, std::uint64_t budget, BigCount required);

  std::uint64_t n() const { return n_; }
  std::uint64_t budget() const { return budget_; }
  /// kappa0(n), the node count the full tree needs.
  const BigCount& required() const { return required_; }

 private:
  std::uint64_t n_;
  std::uint64_t budget_;
  BigCount required_;
};

DivisorTree build_tree(std::uint64_t n, std::uint64_t node_budget = kDefaultNodeBudget);

std::uint64_t node_count(const DivisorTree& t);
/// Number of side-1 squares.
std::uint64_t unit_count(const DivisorTree& t);
/// Entry i is the number of nodes at depth i.
std::vector<BigCount> generation_counts(const DivisorTree& t);

/// Throws std::invalid_argument unless every node's children are exactly its
/// proper divisors in decreasing order.
void validate(const DivisorTree& t);

struct PlacedSquare {
  std::uint64_t side = 0;
  std::uint64_t x = 0;  // lower-left corner, y pointing up
  std::uint64_t y = 0;
  std::uint32_t generation = 0;

  friend bool operator==(const PlacedSquare&, const PlacedSquare&) = default;
};

struct LayoutTree {
  std::vector<PlacedSquare> nodes;  // pre-order, parent before children
  std::uint64_t width = 0;
  std::uint64_t height = 0;

  friend bool operator==(const LayoutTree&, const LayoutTree&) = default;
};

/// Root at the origin. Even generations lay their arm to the right of the
/// square, odd generations above it; each child's arm gets a slot as wide (or
/// tall) as its own subtree, so no two squares overlap anywhere.
LayoutTree layout(const DivisorTree& t);

struct SvgOptions {
  /// Pixels per unit of side length.
  std::uint32_t scale = 8;
  /// Only draw squares up to this generation (a generation-by-generation build-up).
  std::optional<std::uint32_t> max_generation;
};

/// SVG 1.1 document with one <rect> per placed square. Every rect has class
/// "gen<i>"; side-1 squares additionally carry class "unit".
std::string render_svg(const LayoutTree& l, const SvgOptions& options = {});

/// Compact JSON, {"side":n,"children":[...]}.
std::string export_json(const DivisorTree& t);
/// Inverse of export_json. Throws std::invalid_argument on malformed input.
DivisorTree parse_tree_json(const std::string& text);

}  // namespace recdiv
