#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lqw {

/// Segment of sites -half_width..half_width; the walker starts at 0 and must
/// never reach the ends (callers size it so that half_width >= steps).
struct UndirectedLine {
  int half_width = 1;  // n; N = 2n+1 sites
};

/// Forward-only cycle of sites 0..num_sites-1 with periodic wrap.
struct DirectedRing {
  int num_sites = 2;  // N >= 2
};

/// Perfect binary tree, nodes labeled 1..2^(depth+1)-1; children of node i
/// are 2i and 2i+1; leaves are the deepest level.
struct BinaryTree {
  int depth = 1;
};

using Topology = std::variant<UndirectedLine, DirectedRing, BinaryTree>;

/// Throws std::invalid_argument on bad sizes.
void validate(const Topology& topology);

/// Number of non-loop coin directions: 2 (line), 1 (ring), 2 (tree).
int coin_degree(const Topology& topology);

/// Number of sites N.
int site_count(const Topology& topology);

/// Internal index of the walker's start site (x=0 on lines, the root node).
int start_index(const Topology& topology);

/// Site label as drawn: coordinate -n..n (line), 0..N-1 (ring),
/// node id 1..N (tree). Internal indexes are 0..N-1 throughout.
long site_label(const Topology& topology, int index);

/// Value of the position observable: the coordinate on lines, the node's
/// level on the tree.
double position_observable(const Topology& topology, int index);

/// Destination of one coin direction from a site, or nullopt where the move
/// is undefined (off the ends of the line segment, non-loop directions at
/// tree leaves). Directions use the coin basis order; the loop is last.
/// Line: 0 = -1 step, 1 = +1 step. Ring: 0 = forward. Tree: 0 -> child 2i,
/// 1 -> child 2i+1.
std::optional<int> shift_target(const Topology& topology, int direction, int index);

bool is_leaf(const BinaryTree& tree, int index);

enum class TargetSpec { kLastSite, kAllLeaves };

/// Absorbing site set: {N-1} for the ring's last site, the full leaf level
/// for the tree. Other combinations are rejected.
std::vector<int> absorbing_set(const Topology& topology, TargetSpec target);

std::string topology_name(const Topology& topology);

}  // namespace lqw
