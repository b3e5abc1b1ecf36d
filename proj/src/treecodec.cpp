#include <splitlimit/treecodec.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace splitlimit {

// ---------------------------------------------------------------------------
// Graph

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("graph is simple: no loops");
  if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("add_edge");
  auto ins = [](std::vector<int>& a, int x) {
    auto it = std::lower_bound(a.begin(), a.end(), x);
    if (it == a.end() || *it != x) a.insert(it, x);
  };
  ins(adj[u], v);
  ins(adj[v], u);
}

bool Graph::has_edge(int u, int v) const {
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

nlohmann::json Graph::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  auto e = nlohmann::json::array();
  for (auto [u, v] : edges()) e.push_back({u, v});
  j["edges"] = std::move(e);
  return j;
}

Graph Graph::from_json(const nlohmann::json& j) {
  Graph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  return g;
}

bool Graph::operator==(const Graph& o) const { return n == o.n && adj == o.adj; }

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> d(g.n, -1);
  std::queue<int> q;
  d[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.adj[u])
      if (d[v] < 0) {
        d[v] = d[u] + 1;
        q.push(v);
      }
  }
  return d;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

std::vector<bool> articulation_points(const Graph& g) {
  std::vector<bool> cut(g.n, false);
  std::vector<int> disc(g.n, -1), low(g.n, 0);
  int timer = 0;
  // iterative DFS to be safe on path-like graphs
  struct Frame {
    int u, parent;
    std::size_t idx;
    int child_count;
  };
  for (int s = 0; s < g.n; ++s) {
    if (disc[s] >= 0) continue;
    std::vector<Frame> stack{{s, -1, 0, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.idx < g.adj[f.u].size()) {
        int v = g.adj[f.u][f.idx++];
        if (v == f.parent) continue;
        if (disc[v] >= 0) {
          low[f.u] = std::min(low[f.u], disc[v]);
        } else {
          disc[v] = low[v] = timer++;
          ++f.child_count;
          stack.push_back({v, f.u, 0, 0});
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& p = stack.back();
          low[p.u] = std::min(low[p.u], low[done.u]);
          if (p.parent != -1 && low[done.u] >= disc[p.u]) cut[p.u] = true;
        } else {
          if (done.child_count > 1) cut[done.u] = true;
        }
      }
    }
  }
  return cut;
}

// ---------------------------------------------------------------------------
// DHTree

DHTree::DHTree(std::vector<Node> nodes, int root) : nodes_(std::move(nodes)), root_(root) {
  build_indices();
}

DHTree DHTree::bare_edge() {
  DHTree t;
  t.root_ = -1;
  t.leaves_ = {1};
  t.leaf_pos_ = {{-3, -3}, {-1, -1}};
  return t;
}

void DHTree::build_indices() {
  const int m = node_count();
  if (m == 0) throw std::invalid_argument("empty arena; use DHTree::bare_edge()");
  if (root_ < 0 || root_ >= m) throw std::invalid_argument("bad root node index");
  parent_.assign(m, -2);
  depth_.assign(m, -1);
  leaves_.clear();
  int max_label = -1;
  std::vector<int> stack{root_};
  parent_[root_] = -1;
  depth_[root_] = 0;
  int seen = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    ++seen;
    for (int c : nodes_[u].children) {
      if (child_is_leaf(c)) {
        int label = child_label(c);
        leaves_.push_back(label);
        max_label = std::max(max_label, label);
      } else {
        if (c >= m || parent_[c] != -2)
          throw std::invalid_argument("tree arena is not a tree");
        parent_[c] = u;
        depth_[c] = depth_[u] + 1;
        stack.push_back(c);
      }
    }
  }
  if (seen != m) throw std::invalid_argument("unreachable nodes in arena");
  leaf_pos_.assign(max_label + 1, {-3, -3});
  std::sort(leaves_.begin(), leaves_.end());
  for (std::size_t i = 1; i < leaves_.size(); ++i)
    if (leaves_[i] == leaves_[i - 1]) throw std::invalid_argument("duplicate leaf label");
  for (int label : leaves_)
    if (label == 0) throw std::invalid_argument("label 0 is reserved for the root-leaf");
  for (int u = 0; u < m; ++u)
    for (std::size_t s = 0; s < nodes_[u].children.size(); ++s) {
      int c = nodes_[u].children[s];
      if (child_is_leaf(c)) leaf_pos_[child_label(c)] = {u, static_cast<int>(s)};
    }
}

bool DHTree::has_leaf(int label) const {
  if (label == 0) return true;
  return label > 0 && label < static_cast<int>(leaf_pos_.size()) &&
         leaf_pos_[label].first > -2;
}

std::pair<int, int> DHTree::leaf_position(int label) const {
  if (label == 0) return {root_, -1};
  if (!has_leaf(label)) throw std::invalid_argument("leaf not found");
  return leaf_pos_[label];
}

void DHTree::validate_reduced() const {
  for (int i = 0; i < node_count(); ++i) {
    const Node& nd = nodes_[i];
    if (nd.children.size() < 2)
      throw std::invalid_argument("internal node of degree < 3");
    auto child_type = [&](int c) -> int {
      return child_is_leaf(c) ? -1 : static_cast<int>(nodes_[c].type);
    };
    switch (nd.type) {
      case NodeType::K:
        for (int c : nd.children)
          if (child_type(c) == static_cast<int>(NodeType::K))
            throw std::invalid_argument("K node with K child");
        break;
      case NodeType::SC:
        for (int c : nd.children)
          if (child_type(c) == static_cast<int>(NodeType::SC))
            throw std::invalid_argument("S_C node with S_C child");
        break;
      case NodeType::SX: {
        if (nd.dist < 0 || nd.dist >= static_cast<int>(nd.children.size()))
          throw std::invalid_argument("S_X node without a valid distinguished child");
        for (std::size_t s = 0; s < nd.children.size(); ++s) {
          int ct = child_type(nd.children[s]);
          if (static_cast<int>(s) == nd.dist) {
            if (ct == static_cast<int>(NodeType::SX))
              throw std::invalid_argument("distinguished child of S_X has type S_X");
          } else if (ct == static_cast<int>(NodeType::SC)) {
            throw std::invalid_argument("non-distinguished child of S_X has type S_C");
          }
        }
        break;
      }
    }
  }
}

bool DHTree::is_reduced() const {
  try {
    validate_reduced();
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

static const char* type_name(NodeType t) {
  switch (t) {
    case NodeType::K: return "K";
    case NodeType::SC: return "SC";
    case NodeType::SX: return "SX";
  }
  return "?";
}

static NodeType type_from_name(const std::string& s) {
  if (s == "K") return NodeType::K;
  if (s == "SC") return NodeType::SC;
  if (s == "SX") return NodeType::SX;
  throw std::invalid_argument("unknown node type '" + s + "'");
}

static nlohmann::json node_to_json(const DHTree& t, int id) {
  const auto& nd = t.node(id);
  nlohmann::json j;
  j["type"] = type_name(nd.type);
  if (nd.type == NodeType::SX) j["dist"] = nd.dist;
  auto ch = nlohmann::json::array();
  for (int c : nd.children) {
    if (DHTree::child_is_leaf(c))
      ch.push_back(DHTree::child_label(c));
    else
      ch.push_back(node_to_json(t, c));
  }
  j["children"] = std::move(ch);
  return j;
}

nlohmann::json DHTree::to_json() const {
  if (is_bare()) return nlohmann::json(1);
  return node_to_json(*this, root_);
}

static int node_from_json(const nlohmann::json& j, std::vector<DHTree::Node>& arena) {
  DHTree::Node nd;
  nd.type = type_from_name(j.at("type").get<std::string>());
  if (nd.type == NodeType::SX) nd.dist = j.at("dist").get<int>();
  int my = static_cast<int>(arena.size());
  arena.push_back(nd);
  std::vector<int> children;
  for (const auto& c : j.at("children")) {
    if (c.is_number_integer())
      children.push_back(DHTree::leaf_child(c.get<int>()));
    else
      children.push_back(node_from_json(c, arena));
  }
  arena[my].children = std::move(children);
  return my;
}

DHTree DHTree::from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    if (j.get<int>() != 1) throw std::invalid_argument("bare tree must carry leaf 1");
    return DHTree::bare_edge();
  }
  std::vector<Node> arena;
  int root = node_from_json(j, arena);
  return DHTree(std::move(arena), root);
}

static void canonical_rec(const DHTree& t, int id, std::string& out, int& min_leaf) {
  const auto& nd = t.node(id);
  struct Part {
    int min_leaf;
    std::string text;
  };
  std::vector<Part> parts;
  int dist_slot = nd.type == NodeType::SX ? nd.dist : -1;
  std::string dist_text;
  int my_min = INT32_MAX;
  for (std::size_t s = 0; s < nd.children.size(); ++s) {
    int c = nd.children[s];
    Part p;
    if (DHTree::child_is_leaf(c)) {
      p.min_leaf = DHTree::child_label(c);
      p.text = std::to_string(p.min_leaf);
    } else {
      canonical_rec(t, c, p.text, p.min_leaf);
    }
    my_min = std::min(my_min, p.min_leaf);
    if (static_cast<int>(s) == dist_slot)
      dist_text = std::move(p.text);
    else
      parts.push_back(std::move(p));
  }
  std::sort(parts.begin(), parts.end(),
            [](const Part& a, const Part& b) { return a.min_leaf < b.min_leaf; });
  std::string s = type_name(nd.type);
  s += '(';
  if (dist_slot >= 0) {
    s += '!';
    s += dist_text;
    s += ';';
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += parts[i].text;
  }
  s += ')';
  out = std::move(s);
  min_leaf = my_min;
}

std::string DHTree::canonical_key() const {
  if (is_bare()) return "Z(1)";
  std::string s;
  int m;
  canonical_rec(*this, root_, s, m);
  return s;
}

// ---------------------------------------------------------------------------
// Jumps and distances

namespace {

// jump test when the path runs child -> node -> parent
bool jump_through(const DHTree::Node& nd, int child_edge) {
  switch (nd.type) {
    case NodeType::K: return false;
    case NodeType::SC: return false;  // the parent edge is the center
    case NodeType::SX: return nd.children[nd.dist] != child_edge;
  }
  return false;
}

// jump test when the path turns at this node between two child edges
bool jump_turn(const DHTree::Node& nd, int child_edge1, int child_edge2) {
  switch (nd.type) {
    case NodeType::K: return false;
    case NodeType::SC: return true;  // two extremities
    case NodeType::SX: {
      int dc = nd.children[nd.dist];
      return dc != child_edge1 && dc != child_edge2;
    }
  }
  return false;
}

// (anchor node, entering edge, anchor depth) of a path endpoint
struct Anchor {
  int node;  // node above the endpoint, -1 when the endpoint is the root side
  int edge;  // the child edge of `node` leading to the endpoint
  int depth;
};

Anchor anchor_of(const DHTree& t, int v) {
  if (v < 0) {
    int label = DHTree::child_label(v);
    if (label == 0) return {t.root(), -1, -1};  // handled specially
    auto [nd, slot] = t.leaf_position(label);
    (void)slot;
    return {nd, v, nd < 0 ? -1 : t.depth(nd)};
  }
  return {t.parent(v), v, t.parent(v) < 0 ? -1 : t.depth(t.parent(v))};
}

}  // namespace

int path_jumps(const DHTree& t, int va, int vb) {
  if (va == vb) throw std::invalid_argument("path endpoints must differ");
  // the root-leaf endpoint: every interior node is traversed toward the parent
  auto is_root_leaf = [&](int v) { return v < 0 && DHTree::child_label(v) == 0; };
  if (is_root_leaf(vb)) std::swap(va, vb);
  if (is_root_leaf(va)) {
    Anchor b = anchor_of(t, vb);
    int count = 0;
    int node = b.node, edge = b.edge;
    while (node >= 0) {
      if (jump_through(t.node(node), edge)) ++count;
      edge = node;
      node = t.parent(node);
    }
    return count;
  }

  Anchor a = anchor_of(t, va), b = anchor_of(t, vb);
  // one endpoint directly above the other: no interior nodes
  if (vb >= 0 && a.node == vb) return 0;
  if (va >= 0 && b.node == va) return 0;

  // climb to equal depth, then to the meet node; an internal-node endpoint on
  // the other chain terminates the walk without being counted
  int n1 = a.node, e1 = a.edge, d1 = a.depth;
  int n2 = b.node, e2 = b.edge, d2 = b.depth;
  int count = 0;
  auto step = [&](int& n, int& e, int& d) {
    if (jump_through(t.node(n), e)) ++count;
    e = n;
    n = t.parent(n);
    --d;
  };
  while (d1 > d2) {
    if (n1 == vb) return count;
    step(n1, e1, d1);
  }
  while (d2 > d1) {
    if (n2 == va) return count;
    step(n2, e2, d2);
  }
  if (n1 == vb || n2 == va) return count;
  while (n1 != n2) {
    step(n1, e1, d1);
    step(n2, e2, d2);
  }
  if (jump_turn(t.node(n1), e1, e2)) ++count;
  return count;
}

int jumps(const DHTree& t, int leaf1, int leaf2) {
  if (leaf1 == leaf2) throw std::invalid_argument("jumps: leaves must differ");
  for (int l : {leaf1, leaf2})
    if (!t.has_leaf(l)) throw std::invalid_argument("jumps: leaf not found");
  return path_jumps(t, DHTree::leaf_child(leaf1), DHTree::leaf_child(leaf2));
}

int distance(const DHTree& t, int leaf1, int leaf2) { return jumps(t, leaf1, leaf2) + 1; }

Graph gr(const DHTree& t) {
  if (t.is_bare()) {
    Graph g(2);
    g.add_edge(0, 1);
    return g;
  }
  t.validate_reduced();
  const auto& labels = t.leaf_labels();
  int n = t.leaf_count();
  for (int i = 0; i < n; ++i)
    if (labels[i] != i + 1)
      throw std::invalid_argument("gr: leaf labels must be exactly 1..n");
  Graph g(n + 1);
  std::vector<int> all(labels);
  all.insert(all.begin(), 0);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (jumps(t, all[i], all[j]) == 0) g.add_edge(all[i], all[j]);
  return g;
}

// ---------------------------------------------------------------------------
// classify

TreeClass classify(const DHTree& t) {
  TreeClass out;
  if (t.is_bare()) {
    // the two-vertex graph: a cut-free convention is not needed; the
    // 2-connected family starts at size 2, the 3-leaf family includes it
    out.is_2connected = false;
    out.is_3leaf = true;
    return out;
  }
  bool leaf_at_center = t.node(t.root()).type == NodeType::SC;
  bool center_center = false;
  std::vector<int> star_nodes;
  for (int i = 0; i < t.node_count(); ++i) {
    const auto& nd = t.node(i);
    if (nd.type != NodeType::K) star_nodes.push_back(i);
    if (nd.type == NodeType::SX) {
      int dc = nd.children[nd.dist];
      if (DHTree::child_is_leaf(dc)) leaf_at_center = true;
      else if (t.node(dc).type == NodeType::SC) center_center = true;
    }
  }
  out.is_2connected = !leaf_at_center;
  // star nodes form a connected subtree iff (#stars - #star-star tree edges) <= 1
  int star_edges = 0;
  std::set<int> star_set(star_nodes.begin(), star_nodes.end());
  for (int i : star_nodes) {
    int p = t.parent(i);
    if (p >= 0 && star_set.count(p)) ++star_edges;
  }
  bool stars_connected =
      star_nodes.empty() || static_cast<int>(star_nodes.size()) - star_edges == 1;
  out.is_3leaf = stars_connected && !center_center;
  return out;
}

NodeType cotype(const DHTree& t, int vertex) {
  int p, edge;
  if (vertex < 0) {
    int label = DHTree::child_label(vertex);
    if (label == 0) throw std::invalid_argument("cotype: the root-leaf has no parent");
    p = t.leaf_position(label).first;
    edge = vertex;
  } else {
    p = t.parent(vertex);
    if (p < 0) throw std::invalid_argument("cotype: the root node has no parent");
    edge = vertex;
  }
  const auto& pn = t.node(p);
  switch (pn.type) {
    case NodeType::K: return NodeType::K;
    case NodeType::SC: return NodeType::SX;
    case NodeType::SX:
      return pn.children[pn.dist] == edge ? NodeType::SC : NodeType::SX;
  }
  throw std::logic_error("unreachable");
}

long long InducedSubtree::total_jumps() const {
  long long s = 0;
  for (const auto& e : edges) s += e.jumps;
  return s;
}

namespace {

// vertices on the tree path between two endpoints (handles as in path_jumps),
// including both endpoints; nodes as ids, leaves as ~label
std::vector<int> path_vertices(const DHTree& t, int va, int vb) {
  auto chain_to_root = [&](int v) {
    std::vector<int> out{v};
    int n;
    if (v < 0) {
      int label = DHTree::child_label(v);
      n = (label == 0) ? -1 : t.leaf_position(label).first;
      if (label == 0) n = -1;  // chain of the root-leaf is itself only
    } else {
      n = v;
      out.pop_back();
    }
    (void)n;
    std::vector<int> nodes;
    int cur;
    if (v < 0) {
      int label = DHTree::child_label(v);
      cur = (label == 0) ? t.root() : t.leaf_position(label).first;
      if (label == 0) {
        // path starts at the root-leaf, whose neighbor is the root node
        nodes.push_back(t.root());
        cur = -1;
      }
    } else {
      cur = v;
    }
    while (cur >= 0) {
      nodes.push_back(cur);
      cur = t.parent(cur);
    }
    std::vector<int> full{v};
    for (int x : nodes)
      if (!(v >= 0 && x == v)) full.push_back(x);
    if (v >= 0) {
      full.clear();
      full.push_back(v);
      int c = t.parent(v);
      while (c >= 0) {
        full.push_back(c);
        c = t.parent(c);
      }
    }
    return full;
  };
  std::vector<int> ca = chain_to_root(va), cb = chain_to_root(vb);
  // trim the common suffix, keeping the meet vertex once
  int i = static_cast<int>(ca.size()) - 1, j = static_cast<int>(cb.size()) - 1;
  while (i > 0 && j > 0 && ca[i - 1] == cb[j - 1]) {
    --i;
    --j;
  }
  while (i >= 0 && j >= 1 && ca[i] == cb[j - 1]) --j;  // defensive
  std::vector<int> out(ca.begin(), ca.begin() + i + 1);
  for (int k = j - 1; k >= 0; --k) out.push_back(cb[k]);
  return out;
}

}  // namespace

InducedSubtree extract_induced(const DHTree& t, const std::vector<int>& mark_leaves) {
  InducedSubtree out;
  const int k1 = static_cast<int>(mark_leaves.size());  // k+1 marks
  if (k1 < 2) throw std::invalid_argument("extract_induced: need at least two marks");
  std::vector<int> handles;
  for (int l : mark_leaves) {
    if (!t.has_leaf(l)) throw std::invalid_argument("extract_induced: mark is not a leaf");
    handles.push_back(DHTree::leaf_child(l));
  }
  // Steiner tree as an edge set over tree vertices
  std::map<int, std::set<int>> steiner;
  for (int i = 0; i < k1; ++i)
    for (int j = i + 1; j < k1; ++j) {
      auto pv = path_vertices(t, handles[i], handles[j]);
      for (std::size_t s = 0; s + 1 < pv.size(); ++s) {
        steiner[pv[s]].insert(pv[s + 1]);
        steiner[pv[s + 1]].insert(pv[s]);
      }
    }
  // essential vertices: the marks and branch vertices
  std::map<int, int> essential;  // tree vertex handle -> induced id
  for (int i = 0; i < k1; ++i) essential[handles[i]] = -1 - i;
  for (const auto& [v, nb] : steiner) {
    if (v < 0) continue;  // a leaf
    if (nb.size() >= 4) {
      out.degenerate = true;
      return out;
    }
    if (nb.size() == 3) essential.emplace(v, out.internal_count++);
  }
  // walk from each essential vertex along degree-2 chains to the next one
  std::set<std::pair<int, int>> seen;
  for (const auto& [v, id] : essential) {
    for (int first : steiner[v]) {
      int prev = v, cur = first;
      while (!essential.count(cur)) {
        const auto& nb = steiner[cur];
        int next = -1;
        for (int x : nb)
          if (x != prev) next = x;
        prev = cur;
        cur = next;
      }
      int a = id, b = essential[cur];
      if (a > b) std::swap(a, b);
      if (!seen.insert({a, b}).second) continue;
      InducedSubtree::Edge e;
      e.a = a;
      e.b = b;
      int mark = -1;
      if (a < 0) mark = -1 - a;
      if (b < 0 && (mark == -1 || -1 - b < mark)) mark = -1 - b;
      // prefer tagging by the incident mark; for a mark-mark edge (k = 1) tag 0
      e.mark = (a < 0 || b < 0) ? ((a < 0) ? -1 - a : -1 - b) : -1;
      if (a < 0 && b < 0) e.mark = std::min(-1 - a, -1 - b);
      int va = a < 0 ? handles[-1 - a] : edge_vertex_placeholder(a);
      (void)va;
      e.jumps = 0;
      out.edges.push_back(e);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Forbidden induced subgraphs

namespace {

constexpr int kMaxSubsetN = 20;

bool induced_iso(const std::vector<std::uint32_t>& rows, const std::vector<int>& verts,
                 const std::vector<std::pair<int, int>>& target_edges) {
  const int k = static_cast<int>(verts.size());
  // degree prefilter
  std::vector<int> deg(k, 0), tdeg(k, 0);
  std::uint32_t mask = 0;
  for (int v : verts) mask |= (1u << v);
  for (int i = 0; i < k; ++i) deg[i] = __builtin_popcount(rows[verts[i]] & mask);
  for (auto [a, b] : target_edges) {
    ++tdeg[a];
    ++tdeg[b];
  }
  auto ds = deg, ts = tdeg;
  std::sort(ds.begin(), ds.end());
  std::sort(ts.begin(), ts.end());
  if (ds != ts) return false;
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  const int edge_count = static_cast<int>(target_edges.size());
  do {
    // perm maps target vertex -> position in verts
    bool ok = true;
    int found = 0;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j) {
        bool adj = rows[verts[perm[i]]] >> verts[perm[j]] & 1u;
        bool tadj = false;
        for (auto [a, b] : target_edges)
          if ((a == i && b == j) || (a == j && b == i)) {
            tadj = true;
            break;
          }
        if (adj != tadj) ok = false;
        if (ok && adj) ++found;
      }
    if (ok && found == edge_count) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

const std::vector<std::pair<int, int>> kHouse = {
    {0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}};  // square + roof on edge 01
const std::vector<std::pair<int, int>> kGem = {
    {0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}};  // P4 + dominating apex
const std::vector<std::pair<int, int>> kDomino = {
    {0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}};  // two squares sharing edge 1-4

bool subset_is_cycle(const std::vector<std::uint32_t>& rows, std::uint32_t mask) {
  // all induced degrees exactly 2 and connected
  int start = -1;
  for (std::uint32_t m = mask; m;) {
    int v = __builtin_ctz(m);
    m &= m - 1;
    if (__builtin_popcount(rows[v] & mask) != 2) return false;
    start = v;
  }
  std::uint32_t seen = 1u << start, frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t m = frontier; m;) {
      int v = __builtin_ctz(m);
      m &= m - 1;
      next |= rows[v] & mask;
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == mask;
}

std::vector<std::uint32_t> bit_rows(const Graph& g) {
  std::vector<std::uint32_t> rows(g.n, 0);
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u]) rows[u] |= (1u << v);
  return rows;
}

}  // namespace

bool is_dh(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("is_dh: graph must be connected");
  if (g.n > kMaxSubsetN)
    throw std::invalid_argument("is_dh: subset-based check limited to small graphs");
  if (g.n < 5) return true;
  auto rows = bit_rows(g);
  const std::uint32_t full = (g.n == 32) ? ~0u : ((1u << g.n) - 1);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    int pc = __builtin_popcount(mask);
    if (pc < 5) continue;
    if (pc >= 5 && subset_is_cycle(rows, mask)) return false;  // hole
    if (pc == 5 || pc == 6) {
      std::vector<int> verts;
      for (std::uint32_t m = mask; m;) {
        verts.push_back(__builtin_ctz(m));
        m &= m - 1;
      }
      if (pc == 5) {
        if (induced_iso(rows, verts, kHouse)) return false;
        if (induced_iso(rows, verts, kGem)) return false;
      } else if (induced_iso(rows, verts, kDomino)) {
        return false;
      }
    }
  }
  return true;
}

bool is_dh_by_definition(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("is_dh_by_definition: graph must be connected");
  if (g.n > 16)
    throw std::invalid_argument("is_dh_by_definition: subset check limited to small graphs");
  auto rows = bit_rows(g);
  std::vector<std::vector<int>> dist(g.n);
  for (int v = 0; v < g.n; ++v) dist[v] = bfs_distances(g, v);
  const std::uint32_t full = (1u << g.n) - 1;
  // bitmask BFS inside each connected induced subgraph
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (__builtin_popcount(mask) < 3) continue;
    for (std::uint32_t m = mask; m;) {
      int src = __builtin_ctz(m);
      m &= m - 1;
      std::uint32_t seen = 1u << src, frontier = seen;
      int d = 0;
      std::vector<int> dsub(g.n, -1);
      dsub[src] = 0;
      while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f;) {
          int v = __builtin_ctz(f);
          f &= f - 1;
          next |= rows[v] & mask;
        }
        next &= ~seen;
        ++d;
        for (std::uint32_t f = next; f;) {
          int v = __builtin_ctz(f);
          f &= f - 1;
          dsub[v] = d;
        }
        seen |= next;
        frontier = next;
      }
      if (seen != mask) break;  // disconnected induced subgraph: skip this mask
      for (std::uint32_t f = mask; f;) {
        int v = __builtin_ctz(f);
        f &= f - 1;
        if (dsub[v] != dist[src][v]) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// leaf_power

Graph leaf_power(const PlainTree& tree, int k) {
  if (k < 2) throw std::invalid_argument("leaf_power: k must be >= 2");
  Graph t(tree.n);
  for (auto [u, v] : tree.edges) t.add_edge(u, v);
  std::vector<int> leaves;
  for (int v = 0; v < tree.n; ++v)
    if (t.degree(v) == 1) leaves.push_back(v);
  if (leaves.size() < 2) throw std::invalid_argument("leaf_power: tree needs >= 2 leaves");
  std::vector<int> index(tree.n, -1);
  for (std::size_t i = 0; i < leaves.size(); ++i) index[leaves[i]] = static_cast<int>(i);
  Graph g(static_cast<int>(leaves.size()));
  for (int l : leaves) {
    auto d = bfs_distances(t, l);
    for (int m : leaves)
      if (m > l && d[m] <= k) g.add_edge(index[l], index[m]);
  }
  return g;
}

// ---------------------------------------------------------------------------
// decompose

namespace {

struct ElimStep {
  char kind;  // 'T' true twin, 'F' false twin, 'P' pendant
  int u;      // removed vertex
  int v;      // witness: twin of u, or the vertex u hangs from
};

// decorated tree under reconstruction, rooted at an arbitrary leaf
struct BTree {
  struct BN {
    bool clique = false;
    int center = -1;  // -1: center on the parent edge; >=0: child slot (stars only)
    std::vector<int> ch;  // ~leaf or node index
    int parent = -1;
    bool dead = false;
  };
  std::vector<BN> nodes;
  bool bare = true;
  int bare_a = -1, bare_b = -1;
  int root_node = -1;
  int root_leaf = -1;
  std::unordered_map<int, std::pair<int, int>> pos;  // label -> (node, slot); root leaf absent

  int slot_of(int node, int child_value) const {
    const auto& ch = nodes[node].ch;
    for (std::size_t s = 0; s < ch.size(); ++s)
      if (ch[s] == child_value) return static_cast<int>(s);
    throw std::logic_error("child not found");
  }

  void set_pos_for_children(int node) {
    const auto& ch = nodes[node].ch;
    for (std::size_t s = 0; s < ch.size(); ++s) {
      if (ch[s] < 0)
        pos[~ch[s]] = {node, static_cast<int>(s)};
      else
        nodes[ch[s]].parent = node;
    }
  }

  void insert(const ElimStep& st) {
    const int u = st.u, v = st.v;
    BN nn;
    nn.clique = (st.kind == 'T');
    if (bare) {
      int other = (bare_a == v) ? bare_b : bare_a;
      nn.ch = {DHTree::leaf_child(v), DHTree::leaf_child(u)};
      if (st.kind == 'F') nn.center = -1;       // center toward `other`
      if (st.kind == 'P') nn.center = 0;        // center at v
      nn.parent = -1;
      nodes.push_back(nn);
      root_node = 0;
      root_leaf = other;
      bare = false;
      set_pos_for_children(0);
      return;
    }
    auto it = pos.find(v);
    if (it == pos.end()) {
      // v is the root leaf: the new node goes on top; v stays the root leaf
      BN top;
      top.clique = nn.clique;
      top.ch = {DHTree::leaf_child(u), root_node};
      if (st.kind == 'F') top.center = 1;   // center toward the old tree
      if (st.kind == 'P') top.center = -1;  // center at v, the parent edge
      top.parent = -1;
      int id = static_cast<int>(nodes.size());
      nodes.push_back(top);
      nodes[root_node].parent = id;
      root_node = id;
      set_pos_for_children(id);
      return;
    }
    auto [p, slot] = it->second;
    nn.ch = {DHTree::leaf_child(v), DHTree::leaf_child(u)};
    if (st.kind == 'F') nn.center = -1;  // toward the parent
    if (st.kind == 'P') nn.center = 0;   // at v
    nn.parent = p;
    int id = static_cast<int>(nodes.size());
    nodes.push_back(nn);
    nodes[p].ch[slot] = id;
    pos.erase(v);
    set_pos_for_children(id);
  }

  // merge child node c into its parent p, splicing c's children at c's slot
  void absorb(int p, int c) {
    BN& pn = nodes[p];
    BN& cn = nodes[c];
    int slot = slot_of(p, c);
    int p_center_value = (!pn.clique && pn.center >= 0) ? pn.ch[pn.center] : -0x7fffffff;
    int new_center_value = -0x7fffffff;
    if (!pn.clique) {
      if (pn.center == slot) {
        // p's center pointed at c: the merged center is c's center child
        new_center_value = cn.ch[cn.center];
      } else if (pn.center >= 0) {
        new_center_value = p_center_value;
      }
    }
    std::vector<int> merged;
    merged.reserve(pn.ch.size() + cn.ch.size() - 1);
    for (std::size_t s = 0; s < pn.ch.size(); ++s) {
      if (static_cast<int>(s) == slot) {
        for (int cc : cn.ch) merged.push_back(cc);
      } else {
        merged.push_back(pn.ch[s]);
      }
    }
    pn.ch = std::move(merged);
    if (!pn.clique) {
      if (new_center_value == -0x7fffffff)
        pn.center = -1;
      else
        pn.center = slot_of(p, new_center_value);
    }
    cn.dead = true;
    set_pos_for_children(p);
  }

  void normalize() {
    // merge clique-clique edges; contract star edges whose endpoints are a
    // center on one side and an extremity on the other
    bool again = true;
    while (again) {
      again = false;
      for (int c = 0; c < static_cast<int>(nodes.size()); ++c) {
        if (nodes[c].dead) continue;
        int p = nodes[c].parent;
        if (p < 0) continue;
        const BN& cn = nodes[c];
        const BN& pn = nodes[p];
        if (pn.clique && cn.clique) {
          absorb(p, c);
          again = true;
          break;
        }
        if (!pn.clique && !cn.clique) {
          int slot = slot_of(p, c);
          bool p_center_here = (pn.center == slot);
          bool c_center_up = (cn.center == -1);
          if (p_center_here != c_center_up) {  // center meets a foreign extremity
            absorb(p, c);
            again = true;
            break;
          }
        }
      }
    }
  }
};

}  // namespace

DHTree decompose(const Graph& g) {
  if (g.n < 3) throw std::invalid_argument("decompose: need at least 3 vertices");
  if (!is_connected(g)) throw std::invalid_argument("decompose: graph must be connected");

  const int n = g.n;
  const int words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> row(n, std::vector<std::uint64_t>(words, 0));
  for (int u = 0; u < n; ++u)
    for (int v : g.adj[u]) row[u][v / 64] |= (1ull << (v % 64));
  std::vector<bool> alive(n, true);
  std::vector<int> deg(n);
  for (int u = 0; u < n; ++u) deg[u] = g.degree(u);
  int alive_count = n;

  // neighborhoods compared with the bits of both vertices masked out; with the
  // adjacency bit this decides both twin kinds
  auto rows_equal_masked = [&](int a, int b) {
    for (int w = 0; w < words; ++w) {
      std::uint64_t ignore = 0;
      if (a / 64 == w) ignore |= (1ull << (a % 64));
      if (b / 64 == w) ignore |= (1ull << (b % 64));
      if ((row[a][w] & ~ignore) != (row[b][w] & ~ignore)) return false;
    }
    return true;
  };

  auto drop = [&](int u) {
    alive[u] = false;
    --alive_count;
    for (int v = 0; v < n; ++v)
      if (alive[v] && (row[v][u / 64] >> (u % 64) & 1ull)) {
        row[v][u / 64] &= ~(1ull << (u % 64));
        --deg[v];
      }
    row[u].assign(words, 0);
  };

  std::vector<ElimStep> steps;
  while (alive_count > 2) {
    int found_u = -1, found_v = -1;
    char kind = 0;
    for (int u = 0; u < n && found_u < 0; ++u) {
      if (!alive[u]) continue;
      for (int v = 0; v < n; ++v) {
        if (!alive[v] || v == u) continue;
        if (!rows_equal_masked(u, v)) continue;
        bool adjacent = row[u][v / 64] >> (v % 64) & 1ull;
        found_u = u;
        found_v = v;
        kind = adjacent ? 'T' : 'F';
        break;
      }
      if (found_u < 0 && deg[u] == 1) {
        for (int v = 0; v < n; ++v)
          if (alive[v] && (row[u][v / 64] >> (v % 64) & 1ull)) {
            found_u = u;
            found_v = v;
            kind = 'P';
            break;
          }
      }
    }
    if (found_u < 0) throw std::runtime_error("not distance-hereditary");
    steps.push_back({kind, found_u, found_v});
    drop(found_u);
  }

  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (alive[v]) (a < 0 ? a : b) = v;
  if (!(row[a][b / 64] >> (b % 64) & 1ull))
    throw std::logic_error("decompose: residual pair not adjacent");

  BTree bt;
  bt.bare = true;
  bt.bare_a = a;
  bt.bare_b = b;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) bt.insert(*it);
  if (bt.bare) throw std::logic_error("decompose: no insertions replayed");
  bt.normalize();

  // orient the decorated tree at leaf 0 and emit the rooted typed arena
  std::vector<std::vector<int>> atts(bt.nodes.size());   // ~label or node id
  std::vector<int> center_att(bt.nodes.size(), -1);      // index into atts
  for (int i = 0; i < static_cast<int>(bt.nodes.size()); ++i) {
    if (bt.nodes[i].dead) continue;
    const auto& nd = bt.nodes[i];
    atts[i] = nd.ch;
    int parent_att;
    if (nd.parent >= 0)
      parent_att = nd.parent;
    else
      parent_att = DHTree::leaf_child(bt.root_leaf);
    atts[i].push_back(parent_att);
    if (!nd.clique) {
      int cv = (nd.center == -1) ? parent_att : nd.ch[nd.center];
      for (std::size_t s = 0; s < atts[i].size(); ++s)
        if (atts[i][s] == cv) center_att[i] = static_cast<int>(s);
    }
  }

  int anchor;
  if (bt.root_leaf == 0) {
    anchor = bt.root_node;
  } else {
    auto it = bt.pos.find(0);
    if (it == bt.pos.end()) throw std::invalid_argument("decompose: vertex 0 missing");
    anchor = it->second.first;
  }

  std::vector<DHTree::Node> arena;
  // DFS from `anchor`, entered from the direction of leaf 0
  struct StackItem {
    int bnode;
    int from;  // attachment value we came from (~leaf or node id)
    int out;   // arena index
  };
  arena.push_back({});
  std::vector<StackItem> stack{{anchor, DHTree::leaf_child(0), 0}};
  while (!stack.empty()) {
    auto [bn, from, out] = stack.back();
    stack.pop_back();
    const auto& nd = bt.nodes[bn];
    int from_att = -1;
    for (std::size_t s = 0; s < atts[bn].size(); ++s)
      if (atts[bn][s] == from) from_att = static_cast<int>(s);
    if (from_att < 0) throw std::logic_error("decompose: lost orientation");
    NodeType otype;
    if (nd.clique)
      otype = NodeType::K;
    else if (center_att[bn] == from_att)
      otype = NodeType::SC;
    else
      otype = NodeType::SX;
    int odist = -1;
    std::vector<int> out_children;
    for (std::size_t s = 0; s < atts[bn].size(); ++s) {
      if (static_cast<int>(s) == from_att) continue;
      int att = atts[bn][s];
      if (otype == NodeType::SX && static_cast<int>(s) == center_att[bn])
        odist = static_cast<int>(out_children.size());
      if (att < 0) {
        out_children.push_back(att);
      } else {
        int child_out = static_cast<int>(arena.size());
        arena.push_back({});
        stack.push_back({att, bn, child_out});
        out_children.push_back(child_out);
      }
    }
    if (otype == NodeType::SX && odist < 0)
      throw std::logic_error("decompose: S_X node lost its center");
    arena[out].type = otype;
    arena[out].dist = odist;
    arena[out].children = std::move(out_children);
  }

  DHTree t(std::move(arena), 0);
  t.validate_reduced();
  return t;
}

}  // namespace splitlimit
