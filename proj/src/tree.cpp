#include "recdiv/tree.hpp"

#include "recdiv/core.hpp"
#include "recdiv/factor.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace recdiv {

BudgetExceeded::BudgetExceeded(std::uint64_t n, std::uint64_t budget, BigCount required)
    : std::runtime_error("divisor tree of " + std::to_string(n) + " needs " + required.get_str() +
                         " nodes, budget is " + std::to_string(budget)),
      n_(n),
      budget_(budget),
      required_(std::move(required)) {}

namespace {

class ProperDivisors {
 public:
  // Proper divisors of n, largest first.
  const std::vector<std::uint64_t>& of(std::uint64_t n) {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    auto all = divisors(factorize(n));
    all.pop_back();
    std::reverse(all.begin(), all.end());
    return cache_.emplace(n, std::move(all)).first->second;
  }

 private:
  std::map<std::uint64_t, std::vector<std::uint64_t>> cache_;
};

struct BuildState {
  std::uint64_t root;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  ProperDivisors divisors{};
};

DivisorTree grow(std::uint64_t side, BuildState& state) {
  if (++state.nodes > state.budget) {
    throw BudgetExceeded(state.root, state.budget, kappa0_recursive(state.root));
  }
  DivisorTree node{side, {}};
  const auto& divs = state.divisors.of(side);
  node.children.reserve(divs.size());
  // divs stays valid: std::map never relocates its elements.
  for (auto d : divs) node.children.push_back(grow(d, state));
  return node;
}

template <typename Fn>
void visit(const DivisorTree& t, std::uint32_t depth, Fn& fn) {
  fn(t, depth);
  for (const auto& c : t.children) visit(c, depth + 1, fn);
}

}  // namespace

DivisorTree build_tree(std::uint64_t n, std::uint64_t node_budget) {
  if (n == 0) throw std::invalid_argument("divisor tree needs n >= 1");
  BuildState state{n, node_budget};
  return grow(n, state);
}

std::uint64_t node_count(const DivisorTree& t) {
  std::uint64_t count = 0;
  auto fn = [&](const DivisorTree&, std::uint32_t) { ++count; };
  visit(t, 0, fn);
  return count;
}

std::uint64_t unit_count(const DivisorTree& t) {
  std::uint64_t count = 0;
  auto fn = [&](const DivisorTree& node, std::uint32_t) { count += node.side == 1; };
  visit(t, 0, fn);
  return count;
}

std::vector<BigCount> generation_counts(const DivisorTree& t) {
  std::vector<std::uint64_t> counts;
  auto fn = [&](const DivisorTree&, std::uint32_t depth) {
    if (counts.size() <= depth) counts.resize(depth + 1, 0);
    ++counts[depth];
  };
  visit(t, 0, fn);
  std::vector<BigCount> out;
  for (auto c : counts) out.push_back(to_big(c));
  return out;
}

void validate(const DivisorTree& t) {
  ProperDivisors divisors{};
  auto fn = [&](const DivisorTree& node, std::uint32_t) {
    if (node.side == 0) throw std::invalid_argument("divisor tree side must be positive");
    const auto& expected = divisors.of(node.side);
    bool match = expected.size() == node.children.size();
    for (std::size_t k = 0; match && k < expected.size(); ++k) match = node.children[k].side == expected[k];
    if (!match) {
      throw std::invalid_argument("children of " + std::to_string(node.side) +
                                  " are not its proper divisors in decreasing order");
    }
  };
  visit(t, 0, fn);
}

// ---------------------------------------------------------------------------
// Layout

namespace {

struct Extent {
  std::uint64_t width;
  std::uint64_t height;
};

class Placer {
 public:
  explicit Placer(LayoutTree& out) : out_(out) {}

  // Size of the box holding the subtree of a square of this side whose own
  // arm runs right (even generation) or up (odd generation).
  Extent extent(const DivisorTree& t, std::uint32_t generation) {
    const bool right = generation % 2 == 0;
    auto key = std::make_pair(t.side, right);
    if (auto it = extents_.find(key); it != extents_.end()) return it->second;
    Extent e{t.side, t.side};
    std::uint64_t along = t.side;
    for (const auto& c : t.children) {
      const Extent ce = extent(c, generation + 1);
      if (right) {
        along += ce.width;
        e.height = std::max(e.height, ce.height);
      } else {
        along += ce.height;
        e.width = std::max(e.width, ce.width);
      }
    }
    (right ? e.width : e.height) = along;
    extents_.emplace(key, e);
    return e;
  }

  void place(const DivisorTree& t, std::uint64_t x, std::uint64_t y, std::uint32_t generation) {
    out_.nodes.push_back({t.side, x, y, generation});
    const bool right = generation % 2 == 0;
    std::uint64_t cursor = right ? x + t.side : y + t.side;
    for (const auto& c : t.children) {
      const Extent ce = extent(c, generation + 1);
      if (right) {
        place(c, cursor, y, generation + 1);
        cursor += ce.width;
      } else {
        place(c, x, cursor, generation + 1);
        cursor += ce.height;
      }
    }
  }

 private:
  LayoutTree& out_;
  std::map<std::pair<std::uint64_t, bool>, Extent> extents_;
};

constexpr const char* kPalette[] = {"#4e79a7", "#59a14f", "#76b7b2", "#edc948",
                                    "#b07aa1", "#9c755f", "#bab0ac", "#e15759"};

}  // namespace

LayoutTree layout(const DivisorTree& t) {
  LayoutTree out;
  Placer placer(out);
  const Extent e = placer.extent(t, 0);
  out.width = e.width;
  out.height = e.height;
  placer.place(t, 0, 0, 0);
  return out;
}

std::string render_svg(const LayoutTree& l, const SvgOptions& options) {
  const std::uint64_t s = std::max<std::uint32_t>(options.scale, 1);
  const std::uint64_t width = l.width * s;
  const std::uint64_t height = l.height * s;
  std::uint32_t max_gen = 0;
  for (const auto& sq : l.nodes) max_gen = std::max(max_gen, sq.generation);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<style>\n"
      << "rect { stroke: #222222; stroke-width: 1; }\n";
  for (std::uint32_t g = 0; g <= max_gen; ++g) {
    out << ".gen" << g << " { fill: " << kPalette[g % std::size(kPalette)] << "; }\n";
  }
  out << ".unit { fill: #f28e2b; }\n"
      << "</style>\n";
  for (const auto& sq : l.nodes) {
    if (options.max_generation && sq.generation > *options.max_generation) continue;
    out << "<rect class=\"gen" << sq.generation << (sq.side == 1 ? " unit" : "") << "\" x=\"" << sq.x * s
        << "\" y=\"" << (l.height - sq.y - sq.side) * s << "\" width=\"" << sq.side * s << "\" height=\""
        << sq.side * s << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// JSON

namespace {

void write_json(const DivisorTree& t, std::string& out) {
  out += "{\"side\":";
  out += std::to_string(t.side);
  out += ",\"children\":[";
  for (std::size_t k = 0; k < t.children.size(); ++k) {
    if (k) out += ',';
    write_json(t.children[k], out);
  }
  out += "]}";
}

DivisorTree from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("side") || !j.contains("children")) {
    throw std::invalid_argument("tree node needs \"side\" and \"children\"");
  }
  const auto& side = j.at("side");
  const auto& children = j.at("children");
  if (!side.is_number_unsigned() || side.get<std::uint64_t>() == 0) {
    throw std::invalid_argument("tree node side must be a positive integer");
  }
  if (!children.is_array()) throw std::invalid_argument("tree node children must be an array");
  DivisorTree t{side.get<std::uint64_t>(), {}};
  t.children.reserve(children.size());
  for (const auto& c : children) t.children.push_back(from_json(c));
  return t;
}

}  // namespace

std::string export_json(const DivisorTree& t) {
  std::string out;
  write_json(t, out);
  return out;
}

DivisorTree parse_tree_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("tree JSON: ") + e.what());
  }
  return from_json(j);
}

}  // namespace recdiv
