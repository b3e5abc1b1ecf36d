#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace splitlimit {

// Simple labeled undirected graph on vertices 0..n-1.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  Graph() = default;
  explicit Graph(int n_) : n(n_), adj(n_) {}

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  std::vector<std::pair<int, int>> edges() const;  // sorted, u < v

  nlohmann::json to_json() const;
  static Graph from_json(const nlohmann::json& j);

  bool operator==(const Graph& o) const;
};

std::vector<int> bfs_distances(const Graph& g, int src);  // -1 = unreachable
bool is_connected(const Graph& g);
std::vector<bool> articulation_points(const Graph& g);

enum class NodeType : std::uint8_t { K, SC, SX };

// Rooted leaf-labeled clique-star tree.  Internal nodes carry a type; an S_X
// node designates the child attached to the center of its star.  Children
// encode leaves as ~label and internal nodes as their arena index.  The
// root-leaf (label 0) is implicit: it hangs above the root node.  Trees are
// immutable after construction; derived indices are built once.
class DHTree {
 public:
  struct Node {
    NodeType type = NodeType::K;
    int dist = -1;  // child slot of the distinguished (center) child, SX only
    std::vector<int> children;
  };

  static int leaf_child(int label) { return ~label; }
  static bool child_is_leaf(int c) { return c < 0; }
  static int child_label(int c) { return ~c; }

  DHTree() = default;
  DHTree(std::vector<Node> nodes, int root);

  // the size-1 tree: a single leaf (label 1) joined to the root-leaf, with no
  // internal node; gr() of it is the connected graph on two vertices
  static DHTree bare_edge();
  bool is_bare() const { return nodes_.empty(); }

  int node_count() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int i) const { return nodes_[i]; }
  int root() const { return root_; }
  int parent(int node_id) const { return parent_[node_id]; }
  int depth(int node_id) const { return depth_[node_id]; }

  int leaf_count() const { return static_cast<int>(leaves_.size()); }
  const std::vector<int>& leaf_labels() const { return leaves_; }  // sorted
  bool has_leaf(int label) const;
  // (node, child slot) of a leaf; the root-leaf (0) reports (root, -1)
  std::pair<int, int> leaf_position(int label) const;

  // throws std::invalid_argument naming the violated condition
  void validate_reduced() const;
  bool is_reduced() const;

  nlohmann::json to_json() const;
  static DHTree from_json(const nlohmann::json& j);

  // canonical structural key (children sorted by least leaf label); two trees
  // are equal as labeled trees iff their keys match
  std::string canonical_key() const;

 private:
  void build_indices();

  std::vector<Node> nodes_;
  int root_ = -1;
  std::vector<int> parent_;
  std::vector<int> depth_;
  std::vector<int> leaves_;
  std::vector<std::pair<int, int>> leaf_pos_;  // indexed by label
};

// Number of jumps at the interior nodes of the path between two tree vertices.
// A vertex is an internal node id (>= 0) or an encoded leaf (~label); the
// root-leaf is ~0.  Endpoint nodes are not counted.
int path_jumps(const DHTree& t, int va, int vb);

// Jumps between two distinct leaves; labels may include 0, the root-leaf.
int jumps(const DHTree& t, int leaf1, int leaf2);

// Graph distance read off the tree: jumps + 1.
int distance(const DHTree& t, int leaf1, int leaf2);

// The graph encoded by the tree: vertex 0 is the root-leaf, vertices 1..n the
// leaf labels; {l,l'} is an edge iff l' is accessible from l (zero jumps).
Graph gr(const DHTree& t);

// Graph -> reduced tree, by twin/pendant elimination and replay.  Requires a
// connected distance-hereditary graph with >= 3 vertices containing vertex 0.
DHTree decompose(const Graph& g);

struct TreeClass {
  bool is_2connected = false;
  bool is_3leaf = false;
};
TreeClass classify(const DHTree& t);

// Type a vertex would have were the tree re-rooted at it; defined for any
// vertex with a parent (node id >= 0, or encoded leaf ~label, label != 0).
NodeType cotype(const DHTree& t, int vertex);

// The subtree induced by marked leaves: the marks plus their branch vertices
// in the tree, with the jump count of each connecting path.  Mark 0 plays the
// root-leaf.  Vertex encoding in edges: -1-m for mark m, else an index among
// the internal (branch) vertices.
struct InducedSubtree {
  bool degenerate = false;  // a branch vertex of degree >= 4, or marks too close
  int internal_count = 0;
  struct Edge {
    int a, b;       // induced-subtree endpoints
    int jumps;      // jumps interior to the underlying tree path
    int mark = -1;  // m when the edge is incident to mark m, else -1
  };
  std::vector<Edge> edges;
  std::string shape_key;  // canonical shape encoding from mark 0
  long long total_jumps() const;
};
InducedSubtree extract_induced(const DHTree& t, const std::vector<int>& mark_leaves);

// Forbidden-induced-subgraph test (house, gem, domino, holes), by subset
// enumeration; oracle-grade, limited to small graphs.
bool is_dh(const Graph& g);

// Definitional test: distances in every connected induced subgraph agree with
// the ambient distances.  Also subset-based, for small graphs.
bool is_dh_by_definition(const Graph& g);

// A plain unrooted tree, for building k-leaf-power graphs.
struct PlainTree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// Graph on the leaves of `tree`: leaves at tree distance <= k are adjacent.
// Graph vertices are 0..L-1 in increasing order of the leaves' vertex ids.
Graph leaf_power(const PlainTree& tree, int k);

}  // namespace splitlimit
