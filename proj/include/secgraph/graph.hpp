#pragma once

#include <array>
#include <string>
#include <vector>

#include "secgraph/channel.hpp"
#include "secgraph/geometry.hpp"

namespace secgraph {

// out:    directed edges as built
// in:     edge direction reversed
// weak:   undirected, edge present in at least one direction
// strong: undirected, edge present in both directions
enum class Mode { kOut = 0, kIn = 1, kWeak = 2, kStrong = 3 };

constexpr std::array<Mode, 4> kAllModes = {Mode::kOut, Mode::kIn, Mode::kWeak,
                                           Mode::kStrong};
const char* mode_name(Mode m);
Mode parse_mode(const std::string& s);

struct NetworkRealization {
  std::vector<Point> legit;
  std::vector<Point> eaves;
  Window window;
  bool origin_conditioned = false;
};

// Inserts a legitimate node at (0,0) as index 0, leaving everything else
// untouched. Throws if the window does not contain the origin.
NetworkRealization condition_origin(NetworkRealization r);

struct BuildOptions {
  // Quadratic construction path, used as the oracle for the indexed one.
  bool brute_force = false;
  // Wrap both the node-to-node and node-to-eavesdropper metrics around
  // the window (validation runs only; implies the quadratic path).
  bool torus = false;
  double cell_size = 0.0;  // <= 0 picks a density-based default
};

// Directed secure-connectivity graph over the legitimate nodes: node i has
// an out-edge to j iff |x_i - x_j| < out_radius(i), where out_radius(i) is
// driven by i's nearest-eavesdropper distance. All comparisons are strict
// and evaluated on squared distances.
class SecrecyGraph {
 public:
  SecrecyGraph(std::vector<Point> nodes, std::vector<double> rho_e,
               std::vector<double> r_out,
               std::vector<std::vector<NodeId>> out_adj, Window window);

  NodeId num_nodes() const { return static_cast<NodeId>(nodes_.size()); }
  const std::vector<Point>& nodes() const { return nodes_; }
  const std::vector<double>& nearest_eave() const { return rho_e_; }
  const std::vector<double>& out_radius() const { return r_out_; }
  const std::vector<std::vector<NodeId>>& out_adj() const { return out_adj_; }
  const Window& window() const { return window_; }

  std::size_t num_edges() const;

  // Directed adjacency test plus the derived views. Throws for i == j.
  bool edge_exists(NodeId i, NodeId j, Mode mode) const;

  // In-neighbour lists (the transpose), built on demand per call.
  std::vector<std::vector<NodeId>> reverse_adj() const;

 private:
  std::vector<Point> nodes_;
  std::vector<double> rho_e_;
  std::vector<double> r_out_;
  std::vector<std::vector<NodeId>> out_adj_;
  Window window_;
};

SecrecyGraph build_secrecy_graph(const NetworkRealization& realization,
                                 const ChannelParams& params,
                                 const GainModel& model,
                                 const BuildOptions& options = {});

struct ComponentResult {
  std::vector<NodeId> members;   // ascending, always contains the root
  double reached_radius = 0.0;   // max distance from the root node
  bool touched_boundary = false; // some member's out-radius crosses the window edge
};

ComponentResult component(const SecrecyGraph& graph, NodeId root, Mode mode);

// Reached radius from `root` for all four modes at once, sharing one
// transpose. Equivalent to four component() calls.
std::array<double, 4> component_reach_all(const SecrecyGraph& graph,
                                          NodeId root);

}  // namespace secgraph
