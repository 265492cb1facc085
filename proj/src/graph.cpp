#include "secgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace secgraph {

namespace {

// Wrapped squared distance for torus validation runs; both metrics (node
// to node, node to eavesdropper) use it so the nearest-eavesdropper rule
// stays consistent.
double torus_dist2(Point a, Point b, const Window& w) {
  double dx = std::fabs(a.x - b.x);
  double dy = std::fabs(a.y - b.y);
  dx = std::min(dx, w.width() - dx);
  dy = std::min(dy, w.height() - dy);
  return dx * dx + dy * dy;
}

}  // namespace

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::kOut: return "out";
    case Mode::kIn: return "in";
    case Mode::kWeak: return "weak";
    case Mode::kStrong: return "strong";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  for (Mode m : kAllModes)
    if (s == mode_name(m)) return m;
  throw std::invalid_argument("unknown mode: " + s);
}

NetworkRealization condition_origin(NetworkRealization r) {
  if (!r.window.contains({0.0, 0.0}))
    throw std::invalid_argument("window does not contain the origin");
  r.legit.insert(r.legit.begin(), Point{0.0, 0.0});
  r.origin_conditioned = true;
  return r;
}

SecrecyGraph::SecrecyGraph(std::vector<Point> nodes, std::vector<double> rho_e,
                           std::vector<double> r_out,
                           std::vector<std::vector<NodeId>> out_adj,
                           Window window)
    : nodes_(std::move(nodes)),
      rho_e_(std::move(rho_e)),
      r_out_(std::move(r_out)),
      out_adj_(std::move(out_adj)),
      window_(window) {}

std::size_t SecrecyGraph::num_edges() const {
  std::size_t total = 0;
  for (const auto& adj : out_adj_) total += adj.size();
  return total;
}

bool SecrecyGraph::edge_exists(NodeId i, NodeId j, Mode mode) const {
  if (i == j) throw std::invalid_argument("self-loops are undefined");
  if (i < 0 || j < 0 || i >= num_nodes() || j >= num_nodes())
    throw std::out_of_range("node index out of range");
  auto has = [this](NodeId a, NodeId b) {
    return std::binary_search(out_adj_[a].begin(), out_adj_[a].end(), b);
  };
  switch (mode) {
    case Mode::kOut: return has(i, j);
    case Mode::kIn: return has(j, i);
    case Mode::kWeak: return has(i, j) || has(j, i);
    case Mode::kStrong: return has(i, j) && has(j, i);
  }
  return false;
}

std::vector<std::vector<NodeId>> SecrecyGraph::reverse_adj() const {
  std::vector<std::vector<NodeId>> rev(nodes_.size());
  std::vector<std::size_t> degree(nodes_.size(), 0);
  for (const auto& adj : out_adj_)
    for (NodeId j : adj) ++degree[j];
  for (std::size_t j = 0; j < nodes_.size(); ++j) rev[j].reserve(degree[j]);
  for (NodeId i = 0; i < num_nodes(); ++i)
    for (NodeId j : out_adj_[i]) rev[j].push_back(i);
  // Pushing in ascending i keeps every reverse list sorted.
  return rev;
}

SecrecyGraph build_secrecy_graph(const NetworkRealization& realization,
                                 const ChannelParams& params,
                                 const GainModel& model,
                                 const BuildOptions& options) {
  if (!realization.window.valid())
    throw std::invalid_argument("invalid realization window");
  const auto& legit = realization.legit;
  const auto& eaves = realization.eaves;
  NodeId n = static_cast<NodeId>(legit.size());

  std::vector<double> rho_e(n, kInf);
  std::vector<double> r_out(n, 0.0);
  std::vector<std::vector<NodeId>> adj(n);

  bool quadratic = options.brute_force || options.torus;
  if (quadratic) {
    auto d2 = [&](Point a, Point b) {
      return options.torus ? torus_dist2(a, b, realization.window)
                           : dist2(a, b);
    };
    for (NodeId i = 0; i < n; ++i) {
      double best = kInf;
      for (const Point& e : eaves) best = std::min(best, d2(legit[i], e));
      rho_e[i] = std::sqrt(best);
      r_out[i] = out_radius(params, model, rho_e[i]);
      double r2 = r_out[i] * r_out[i];
      for (NodeId j = 0; j < n; ++j)
        if (j != i && d2(legit[i], legit[j]) < r2) adj[i].push_back(j);
    }
  } else {
    double cell = options.cell_size;
    if (!(cell > 0.0)) {
      double area = realization.window.area();
      double ll = area > 0.0 ? static_cast<double>(n) / area : 0.0;
      double le =
          area > 0.0 ? static_cast<double>(eaves.size()) / area : 0.0;
      cell = SpatialIndex::default_cell_size(ll, le, realization.window);
    }
    // Eavesdroppers may lie outside the node window (padded sampling), so
    // index them over their own bounding region.
    Window ewin = realization.window;
    for (const Point& e : eaves) {
      ewin.lo.x = std::min(ewin.lo.x, e.x);
      ewin.lo.y = std::min(ewin.lo.y, e.y);
      ewin.hi.x = std::max(ewin.hi.x, e.x);
      ewin.hi.y = std::max(ewin.hi.y, e.y);
    }
    SpatialIndex eave_index(eaves, ewin, cell);
    SpatialIndex node_index(legit, realization.window, cell);
    for (NodeId i = 0; i < n; ++i) {
      rho_e[i] = eave_index.nearest_distance(legit[i]);
      r_out[i] = out_radius(params, model, rho_e[i]);
      node_index.collect_within(legit[i], r_out[i], adj[i]);
      std::erase(adj[i], i);
      std::sort(adj[i].begin(), adj[i].end());
    }
  }
  return SecrecyGraph(legit, std::move(rho_e), std::move(r_out),
                      std::move(adj), realization.window);
}

namespace {

// BFS over a neighbour oracle; returns ascending member list.
template <typename Neighbors>
std::vector<NodeId> bfs(NodeId n, NodeId root, Neighbors&& neighbors) {
  std::vector<char> seen(n, 0);
  std::vector<NodeId> queue;
  queue.push_back(root);
  seen[root] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeId u = queue[head];
    neighbors(u, [&](NodeId v) {
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
    });
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<NodeId> mode_members(const SecrecyGraph& g, NodeId root,
                                 Mode mode) {
  const auto& out = g.out_adj();
  if (mode == Mode::kOut) {
    return bfs(g.num_nodes(), root, [&](NodeId u, auto&& visit) {
      for (NodeId v : out[u]) visit(v);
    });
  }
  auto rev = g.reverse_adj();
  switch (mode) {
    case Mode::kIn:
      return bfs(g.num_nodes(), root, [&](NodeId u, auto&& visit) {
        for (NodeId v : rev[u]) visit(v);
      });
    case Mode::kWeak:
      return bfs(g.num_nodes(), root, [&](NodeId u, auto&& visit) {
        for (NodeId v : out[u]) visit(v);
        for (NodeId v : rev[u]) visit(v);
      });
    default: {  // strong: neighbours present in both directions
      std::vector<NodeId> both;
      return bfs(g.num_nodes(), root, [&](NodeId u, auto&& visit) {
        both.clear();
        std::set_intersection(out[u].begin(), out[u].end(), rev[u].begin(),
                              rev[u].end(), std::back_inserter(both));
        for (NodeId v : both) visit(v);
      });
    }
  }
}

}  // namespace

ComponentResult component(const SecrecyGraph& graph, NodeId root, Mode mode) {
  if (root < 0 || root >= graph.num_nodes())
    throw std::out_of_range("component root out of range");
  ComponentResult result;
  result.members = mode_members(graph, root, mode);
  Point origin = graph.nodes()[root];
  double max_d2 = 0.0;
  for (NodeId m : result.members) {
    max_d2 = std::max(max_d2, dist2(origin, graph.nodes()[m]));
    if (boundary_distance(graph.window(), graph.nodes()[m]) <
        graph.out_radius()[m])
      result.touched_boundary = true;
  }
  result.reached_radius = std::sqrt(max_d2);
  return result;
}

std::array<double, 4> component_reach_all(const SecrecyGraph& graph,
                                          NodeId root) {
  std::array<double, 4> reach{};
  const auto& out = graph.out_adj();
  auto rev = graph.reverse_adj();
  Point origin = graph.nodes()[root];
  auto max_reach = [&](const std::vector<NodeId>& members) {
    double best = 0.0;
    for (NodeId m : members)
      best = std::max(best, dist2(origin, graph.nodes()[m]));
    return std::sqrt(best);
  };
  NodeId n = graph.num_nodes();
  reach[static_cast<int>(Mode::kOut)] =
      max_reach(bfs(n, root, [&](NodeId u, auto&& visit) {
        for (NodeId v : out[u]) visit(v);
      }));
  reach[static_cast<int>(Mode::kIn)] =
      max_reach(bfs(n, root, [&](NodeId u, auto&& visit) {
        for (NodeId v : rev[u]) visit(v);
      }));
  reach[static_cast<int>(Mode::kWeak)] =
      max_reach(bfs(n, root, [&](NodeId u, auto&& visit) {
        for (NodeId v : out[u]) visit(v);
        for (NodeId v : rev[u]) visit(v);
      }));
  std::vector<NodeId> both;
  reach[static_cast<int>(Mode::kStrong)] =
      max_reach(bfs(n, root, [&](NodeId u, auto&& visit) {
        both.clear();
        std::set_intersection(out[u].begin(), out[u].end(), rev[u].begin(),
                              rev[u].end(), std::back_inserter(both));
        for (NodeId v : both) visit(v);
      }));
  return reach;
}

}  // namespace secgraph
