#include "loesung/gim.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace loesung {

std::vector<int> Ordering::by_rank() const {
  std::vector<int> out(pos.size());
  for (size_t i = 0; i < pos.size(); ++i) out[pos[i]] = static_cast<int>(i);
  return out;
}

Ordering Ordering::from_ranks(const std::vector<int>& smallest_first) {
  const int n = static_cast<int>(smallest_first.size());
  Ordering o;
  o.pos.assign(n, -1);
  for (int r = 0; r < n; ++r) {
    int i = smallest_first[r];
    if (i < 0 || i >= n || o.pos[i] != -1)
      throw InputError("Ordering: not a permutation");
    o.pos[i] = r;
  }
  return o;
}

Ordering Ordering::from_chain(const std::string& chain, int n) {
  char sep = 0;
  for (char c : chain) {
    if (c == '<' || c == '>') {
      if (sep == 0) sep = c;
      else if (sep != c)
        throw InputError("Ordering: mixed '<' and '>' in chain");
    }
  }
  if (sep == 0 && n > 1) throw InputError("Ordering: no separators in chain");
  std::vector<int> listed;
  std::istringstream is(chain);
  std::string tok;
  while (std::getline(is, tok, sep == 0 ? '<' : sep)) {
    if (tok.empty()) throw InputError("Ordering: empty chain element");
    int v;
    try {
      v = std::stoi(tok);
    } catch (const std::exception&) {
      throw InputError("Ordering: bad chain element '" + tok + "'");
    }
    if (v < 1 || v > n) throw IndexOutOfRange("Ordering: index out of range");
    listed.push_back(v - 1);
  }
  if (static_cast<int>(listed.size()) != n)
    throw InputError("Ordering: chain must list every index once");
  if (sep == '>') std::reverse(listed.begin(), listed.end());
  return from_ranks(listed);
}

std::string Ordering::chain() const {
  std::ostringstream os;
  auto ranks = by_rank();
  for (size_t r = 0; r < ranks.size(); ++r) {
    if (r) os << "<";
    os << (ranks[r] + 1);
  }
  return os.str();
}

std::vector<Ordering> all_orderings(int n) {
  if (n > 8) throw RankTooLarge("all_orderings: n > 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Ordering> out;
  do {
    out.push_back(Ordering::from_ranks(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Gim gim_from_ordering(const SkewMatrix& b, const Ordering& o) {
  if (o.n() != b.n) throw LengthMismatch("gim_from_ordering: rank mismatch");
  Gim g;
  g.ordering = o;
  g.source = b;
  g.a = IntMatrix(b.n, b.n);
  for (int i = 0; i < b.n; ++i)
    for (int j = 0; j < b.n; ++j)
      g.a(i, j) = (i == j) ? Int(2) : (o.precedes(i, j) ? b.b(i, j) : -b.b(i, j));
  return g;
}

Int quadratic_form(const Gim& g, const IntRowVec& m) {
  if (m.size() != g.n()) throw LengthMismatch("quadratic_form: length mismatch");
  Int q = 0;
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j)
      q += g.source.d[j] * g.a(i, j) * m(i) * m(j);
  return q;
}

LoesungCheck is_loesung(const Gim& g, const IntRowVec& m) {
  LoesungCheck out;
  out.value = quadratic_form(g, m);
  for (int k = 0; k < g.n(); ++k) {
    if (out.value == Int(2) * g.source.d[k]) {
      out.k = k;
      break;
    }
  }
  out.positive = true;
  for (int i = 0; i < g.n(); ++i)
    if (m(i).sgn() < 0) out.positive = false;
  return out;
}

namespace {

// Walks the unique cycle through a vertex subset whose induced graph is a
// cycle; returns the path starting at the smallest vertex, second vertex the
// smaller of its two neighbors.
std::vector<int> walk_cycle(const SkewMatrix& b, const std::vector<int>& verts) {
  auto adjacent = [&](int u, int v) { return !b.b(u, v).is_zero(); };
  int start = verts.front();
  std::vector<int> nbrs;
  for (int v : verts)
    if (v != start && adjacent(start, v)) nbrs.push_back(v);
  std::sort(nbrs.begin(), nbrs.end());
  std::vector<int> path{start, nbrs.front()};
  while (path.size() < verts.size()) {
    int cur = path.back(), prev = path[path.size() - 2];
    for (int v : verts) {
      if (v != cur && v != prev && adjacent(cur, v)) {
        path.push_back(v);
        break;
      }
    }
  }
  return path;
}

bool cycle_oriented(const SkewMatrix& b, const std::vector<int>& path) {
  int s = 0;
  for (size_t t = 0; t < path.size(); ++t) {
    int u = path[t], v = path[(t + 1) % path.size()];
    int e = b.b(u, v).sgn();
    if (e == 0) return false;
    if (s == 0) s = e;
    else if (s != e) return false;
  }
  return true;
}

}  // namespace

std::vector<ChordlessCycle> chordless_cycles(const SkewMatrix& b) {
  const int n = b.n;
  if (n > 16) throw RankTooLarge("chordless_cycles: n > 16");
  std::vector<ChordlessCycle> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> verts;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) verts.push_back(i);
    if (verts.size() < 3) continue;
    // induced subgraph is a cycle iff every vertex has degree exactly 2 in it
    bool is_cycle = true;
    for (int u : verts) {
      int deg = 0;
      for (int v : verts)
        if (v != u && !b.b(u, v).is_zero()) ++deg;
      if (deg != 2) {
        is_cycle = false;
        break;
      }
    }
    if (!is_cycle) continue;
    std::vector<int> path = walk_cycle(b, verts);
    if (path.size() != verts.size()) continue;  // degree-2 but disconnected
    ChordlessCycle c;
    c.vertices = path;
    c.oriented = cycle_oriented(b, path);
    out.push_back(std::move(c));
  }
  return out;
}

bool ordering_satisfies_parity(const SkewMatrix& b, const Ordering& o) {
  Gim g = gim_from_ordering(b, o);
  for (const ChordlessCycle& c : chordless_cycles(b)) {
    if (!c.oriented) continue;
    int positives = 0;
    for (size_t t = 0; t < c.vertices.size(); ++t) {
      int u = c.vertices[t], v = c.vertices[(t + 1) % c.vertices.size()];
      if (g.a(u, v).sgn() > 0) ++positives;
    }
    if (positives % 2 == 0) return false;
  }
  return true;
}

namespace {

using Edge = std::pair<int, int>;  // i < j, undirected; b(i,j) != 0

struct DigraphView {
  const SkewMatrix* b;
  // arrow i -> j iff b(i,j) < 0
  bool arrow(int i, int j) const { return b->b(i, j).sgn() < 0; }
};

std::vector<Edge> undirected_edges(const SkewMatrix& b) {
  std::vector<Edge> out;
  for (int i = 0; i < b.n; ++i)
    for (int j = i + 1; j < b.n; ++j)
      if (!b.b(i, j).is_zero()) out.emplace_back(i, j);
  return out;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

// Chordless cycles of the subgraph whose edge set is `edges`, requiring the
// cycle to also be chordless in the full matrix graph (no extra b-edges
// between its vertices). Returns false in `ok` when some subgraph-chordless
// cycle is NOT chordless in b.
struct SubgraphCycles {
  std::vector<std::vector<int>> cycles;  // vertex paths
  bool all_chordless_in_b = true;
};

SubgraphCycles subgraph_chordless_cycles(const SkewMatrix& b,
                                         const std::vector<Edge>& edges) {
  const int n = b.n;
  SubgraphCycles out;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [i, j] : edges) adj[i][j] = adj[j][i] = 1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> verts;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) verts.push_back(i);
    if (verts.size() < 3) continue;
    bool is_cycle = true;
    for (int u : verts) {
      int deg = 0;
      for (int v : verts)
        if (v != u && adj[u][v]) ++deg;
      if (deg != 2) {
        is_cycle = false;
        break;
      }
    }
    if (!is_cycle) continue;
    // connectivity: walk from the smallest vertex towards its smaller neighbor
    std::vector<int> path{verts.front()};
    for (int v : verts)
      if (v != verts.front() && adj[verts.front()][v]) {
        path.push_back(v);
        break;
      }
    while (path.size() < verts.size()) {
      int cur = path.back(), prev = path[path.size() - 2];
      int nxt = -1;
      for (int v : verts)
        if (v != cur && v != prev && adj[cur][v]) {
          nxt = v;
          break;
        }
      if (nxt == -1 ||
          std::find(path.begin(), path.end(), nxt) != path.end())
        break;
      path.push_back(nxt);
    }
    if (path.size() != verts.size()) continue;  // two disjoint cycles etc.
    // chordless in b?
    bool chordless_in_b = true;
    for (size_t s = 0; s < verts.size() && chordless_in_b; ++s)
      for (size_t t = s + 1; t < verts.size(); ++t) {
        int u = verts[s], v = verts[t];
        if (!adj[u][v] && !b.b(u, v).is_zero()) {
          chordless_in_b = false;
          break;
        }
      }
    if (!chordless_in_b) out.all_chordless_in_b = false;
    out.cycles.push_back(path);
  }
  return out;
}

bool edge_on_path_cycle(const std::vector<int>& path, const Edge& e) {
  for (size_t t = 0; t < path.size(); ++t) {
    int u = path[t], v = path[(t + 1) % path.size()];
    if ((u == e.first && v == e.second) || (u == e.second && v == e.first))
      return true;
  }
  return false;
}

// Lexicographically smallest topological order of the digraph given by
// arrows(); returns empty on a directed cycle.
std::vector<int> lex_topological_sort(
    int n, const std::vector<std::vector<char>>& arrow) {
  std::vector<int> indeg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (arrow[i][j]) ++indeg[j];
  std::set<int> ready;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.insert(i);
  std::vector<int> order;
  while (!ready.empty()) {
    int u = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(u);
    for (int v = 0; v < n; ++v)
      if (arrow[u][v] && --indeg[v] == 0) ready.insert(v);
  }
  if (static_cast<int>(order.size()) != n) return {};
  return order;
}

struct LemmaSearch {
  const SkewMatrix& b;
  DigraphView g;
  std::vector<Edge> all_edges;
  std::vector<std::vector<int>> oriented_cycles;  // vertex paths in b
  int forest_size = 0;

  explicit LemmaSearch(const SkewMatrix& bm) : b(bm), g{&bm} {
    all_edges = undirected_edges(b);
    for (const ChordlessCycle& c : chordless_cycles(b))
      if (c.oriented) oriented_cycles.push_back(c.vertices);
    UnionFind uf(b.n);
    for (auto [i, j] : all_edges)
      if (uf.unite(i, j)) ++forest_size;
  }

  bool tree_covers_all(const std::vector<Edge>& tree) const {
    for (const auto& cyc : oriented_cycles) {
      bool covered = false;
      for (const Edge& e : tree)
        if (edge_on_path_cycle(cyc, e)) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
    return true;
  }

  // Orders `rest` so that each prefix keeps every subgraph-chordless cycle
  // chordless in b; each added edge is assigned one chordless cycle through
  // it. The assignment is a search dimension: dense graphs close several
  // chordless cycles at once and only some assignments let the reversal
  // rules cover every oriented cycle. Calls `leaf` on each complete
  // (ordered, cycles) pair; stops once `leaf` returns true.
  template <typename Leaf>
  bool order_rest(const std::vector<Edge>& tree, std::vector<Edge> remaining,
                  std::vector<Edge>& ordered,
                  std::vector<std::vector<int>>& cycles, Leaf&& leaf) const {
    if (remaining.empty()) return leaf(ordered, cycles);
    std::vector<Edge> current = tree;
    current.insert(current.end(), ordered.begin(), ordered.end());
    for (size_t pick = 0; pick < remaining.size(); ++pick) {
      Edge e = remaining[pick];
      std::vector<Edge> trial = current;
      trial.push_back(e);
      SubgraphCycles sc = subgraph_chordless_cycles(b, trial);
      if (!sc.all_chordless_in_b) continue;
      std::vector<Edge> next_remaining = remaining;
      next_remaining.erase(next_remaining.begin() + pick);
      for (const auto& cyc : sc.cycles) {
        if (!edge_on_path_cycle(cyc, e)) continue;
        ordered.push_back(e);
        cycles.push_back(cyc);
        if (order_rest(tree, next_remaining, ordered, cycles, leaf))
          return true;
        ordered.pop_back();
        cycles.pop_back();
      }
    }
    return false;
  }

  // Proof rules (1)/(2): decide the reversal set over the ordered extra edges.
  std::vector<char> choose_reversals(
      const std::vector<Edge>& ordered,
      const std::vector<std::vector<int>>& cycles) const {
    const int m = static_cast<int>(ordered.size());
    std::vector<char> chosen(m, 0);
    auto edge_index = [&](int u, int v) -> int {
      for (int t = 0; t < m; ++t) {
        if ((ordered[t].first == std::min(u, v)) &&
            (ordered[t].second == std::max(u, v)))
          return t;
      }
      return -1;
    };
    for (int i = 0; i < m; ++i) {
      const std::vector<int>& cyc = cycles[i];
      // rule (1): oriented once earlier chosen edges are reversed, e_i as-is
      bool directed = true;
      int dir = 0;  // +1 = along path order, -1 = against, 0 = unset
      for (size_t t = 0; t < cyc.size() && directed; ++t) {
        int u = cyc[t], v = cyc[(t + 1) % cyc.size()];
        int idx = edge_index(u, v);
        bool fwd = g.arrow(u, v);
        if (idx >= 0 && idx < i && chosen[idx]) fwd = !fwd;
        int e = fwd ? 1 : -1;
        if (dir == 0) dir = e;
        else if (dir != e) directed = false;
      }
      if (directed) {
        chosen[i] = 1;
        continue;
      }
      // rule (2): oriented in b and evenly many earlier chosen edges on it
      bool oriented_in_b = false;
      for (const auto& oc : oriented_cycles) {
        std::vector<int> a = oc, bb = cyc;
        std::sort(a.begin(), a.end());
        std::sort(bb.begin(), bb.end());
        if (a == bb) {
          oriented_in_b = true;
          break;
        }
      }
      if (!oriented_in_b) continue;
      int count = 0;
      for (int kk = 0; kk < i; ++kk)
        if (chosen[kk] && edge_on_path_cycle(cyc, ordered[kk])) ++count;
      if (count % 2 == 0) chosen[i] = 1;
    }
    return chosen;
  }

  std::optional<Ordering> try_tree(const std::vector<Edge>& tree) const {
    std::vector<Edge> remaining;
    for (const Edge& e : all_edges)
      if (std::find(tree.begin(), tree.end(), e) == tree.end())
        remaining.push_back(e);
    std::vector<Edge> ordered;
    std::vector<std::vector<int>> cycles;
    std::optional<Ordering> found;
    order_rest(tree, remaining, ordered, cycles,
               [&](const std::vector<Edge>& ord_edges,
                   const std::vector<std::vector<int>>& ord_cycles) {
                 std::vector<char> chosen =
                     choose_reversals(ord_edges, ord_cycles);
                 // H = G with chosen edges reversed
                 std::vector<std::vector<char>> arrow(
                     b.n, std::vector<char>(b.n, 0));
                 for (const Edge& e : all_edges) {
                   int u = g.arrow(e.first, e.second) ? e.first : e.second;
                   int v = (u == e.first) ? e.second : e.first;
                   for (size_t t = 0; t < ord_edges.size(); ++t)
                     if (chosen[t] && ord_edges[t] == e) std::swap(u, v);
                   arrow[u][v] = 1;
                 }
                 std::vector<int> topo = lex_topological_sort(b.n, arrow);
                 if (topo.empty() && b.n > 0) return false;
                 Ordering o = Ordering::from_ranks(topo);
                 if (!ordering_satisfies_parity(b, o)) return false;
                 found = o;
                 return true;
               });
    return found;
  }

  // Enumerates spanning forests in edge-lexicographic backtracking order.
  std::optional<Ordering> run() const {
    std::vector<Edge> tree;
    std::optional<Ordering> found;
    search_forest(0, tree, found);
    return found;
  }

  void search_forest(size_t start, std::vector<Edge>& tree,
                     std::optional<Ordering>& found) const {
    if (found) return;
    if (static_cast<int>(tree.size()) == forest_size) {
      if (tree_covers_all(tree)) found = try_tree(tree);
      return;
    }
    for (size_t idx = start; idx < all_edges.size(); ++idx) {
      UnionFind uf(b.n);
      for (const Edge& e : tree) uf.unite(e.first, e.second);
      if (!uf.unite(all_edges[idx].first, all_edges[idx].second)) continue;
      tree.push_back(all_edges[idx]);
      search_forest(idx + 1, tree, found);
      tree.pop_back();
      if (found) return;
    }
  }
};

}  // namespace

std::optional<Ordering> find_admissible_ordering(const SkewMatrix& b) {
  if (b.n == 0) return Ordering{};
  LemmaSearch search(b);
  return search.run();
}

std::vector<Ordering> brute_force_ordering_search(const SkewMatrix& b) {
  if (b.n > 8) throw RankTooLarge("brute_force_ordering_search: n > 8");
  std::vector<Ordering> out;
  for (const Ordering& o : all_orderings(b.n))
    if (ordering_satisfies_parity(b, o)) out.push_back(o);
  return out;
}

}  // namespace loesung
