#include "lqw/topology.hpp"

#include <bit>
#include <stdexcept>

namespace lqw {

namespace {

void check_index(const Topology& topology, int index) {
  if (index < 0 || index >= site_count(topology)) {
    throw std::invalid_argument("site index out of range");
  }
}

int tree_site_count(const BinaryTree& tree) { return (1 << (tree.depth + 1)) - 1; }

// level of node id i (1-based): floor(log2(i))
int node_level(int node) { return std::bit_width(static_cast<unsigned>(node)) - 1; }

}  // namespace

void validate(const Topology& topology) {
  if (const auto* line = std::get_if<UndirectedLine>(&topology)) {
    if (line->half_width < 1) throw std::invalid_argument("line half width must be >= 1");
  } else if (const auto* ring = std::get_if<DirectedRing>(&topology)) {
    if (ring->num_sites < 2) throw std::invalid_argument("ring needs at least 2 sites");
  } else if (const auto* tree = std::get_if<BinaryTree>(&topology)) {
    if (tree->depth < 1 || tree->depth > 25) throw std::invalid_argument("tree depth must be in 1..25");
  }
}

int coin_degree(const Topology& topology) {
  return std::holds_alternative<DirectedRing>(topology) ? 1 : 2;
}

int site_count(const Topology& topology) {
  if (const auto* line = std::get_if<UndirectedLine>(&topology)) return 2 * line->half_width + 1;
  if (const auto* ring = std::get_if<DirectedRing>(&topology)) return ring->num_sites;
  return tree_site_count(std::get<BinaryTree>(topology));
}

int start_index(const Topology& topology) {
  if (const auto* line = std::get_if<UndirectedLine>(&topology)) return line->half_width;
  return 0;
}

long site_label(const Topology& topology, int index) {
  check_index(topology, index);
  if (const auto* line = std::get_if<UndirectedLine>(&topology)) return index - line->half_width;
  if (std::holds_alternative<DirectedRing>(topology)) return index;
  return index + 1;  // tree node id
}

double position_observable(const Topology& topology, int index) {
  check_index(topology, index);
  if (std::holds_alternative<BinaryTree>(topology)) {
    return node_level(index + 1);
  }
  return static_cast<double>(site_label(topology, index));
}

std::optional<int> shift_target(const Topology& topology, int direction, int index) {
  check_index(topology, index);
  const int degree = coin_degree(topology);
  if (direction < 0 || direction > degree) {
    throw std::invalid_argument("coin direction out of range");
  }
  if (direction == degree) return index;  // self-loop

  if (const auto* line = std::get_if<UndirectedLine>(&topology)) {
    const int next = index + (direction == 0 ? -1 : +1);
    if (next < 0 || next >= 2 * line->half_width + 1) return std::nullopt;
    return next;
  }
  if (const auto* ring = std::get_if<DirectedRing>(&topology)) {
    return (index + 1) % ring->num_sites;
  }
  const auto& tree = std::get<BinaryTree>(topology);
  if (is_leaf(tree, index)) return std::nullopt;
  const int node = index + 1;
  const int child = 2 * node + direction;
  return child - 1;
}

bool is_leaf(const BinaryTree& tree, int index) {
  return index + 1 >= (1 << tree.depth);
}

std::vector<int> absorbing_set(const Topology& topology, TargetSpec target) {
  validate(topology);
  if (const auto* ring = std::get_if<DirectedRing>(&topology)) {
    if (target != TargetSpec::kLastSite) {
      throw std::invalid_argument("directed ring only supports the last-site target");
    }
    return {ring->num_sites - 1};
  }
  if (const auto* tree = std::get_if<BinaryTree>(&topology)) {
    if (target != TargetSpec::kAllLeaves) {
      throw std::invalid_argument("binary tree only supports the all-leaves target");
    }
    std::vector<int> leaves;
    leaves.reserve(1u << tree->depth);
    for (int node = 1 << tree->depth; node <= tree_site_count(*tree); ++node) {
      leaves.push_back(node - 1);
    }
    return leaves;
  }
  throw std::invalid_argument("no absorbing target defined for the undirected line");
}

std::string topology_name(const Topology& topology) {
  if (std::holds_alternative<UndirectedLine>(topology)) return "undirected-line";
  if (std::holds_alternative<DirectedRing>(topology)) return "directed-line";
  return "binary-tree";
}

}  // namespace lqw
