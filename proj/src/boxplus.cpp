#include "trom/boxplus.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "trom/errors.hpp"

namespace trom {

namespace {

const Cell kOrtho[4] = {{0, 1}, {1, 0}, {0, -1}, {-1, 0}};

bool graph_connected(const AdjacencyGraph& g) {
    if (g.vertices.empty()) return true;
    std::vector<char> seen(g.vertices.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.adj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == g.vertices.size();
}

// BFS order from vertex 0 plus parent links; expects a connected graph.
void bfs_tree(const AdjacencyGraph& g, std::vector<int>& parent, std::vector<int>& order) {
    parent.assign(g.vertices.size(), -1);
    order.clear();
    order.reserve(g.vertices.size());
    std::vector<char> seen(g.vertices.size(), 0);
    seen[0] = 1;
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
        int u = order[head];
        for (int v : g.adj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                parent[static_cast<std::size_t>(v)] = u;
                order.push_back(v);
            }
    }
}

// Subtree sizes for the BFS tree; only meaningful when the graph is a tree.
std::vector<int> subtree_sizes(const std::vector<int>& parent, const std::vector<int>& order) {
    std::vector<int> sub(parent.size(), 1);
    for (std::size_t i = order.size(); i-- > 1;) {
        std::size_t u = static_cast<std::size_t>(order[i]);
        sub[static_cast<std::size_t>(parent[u])] += sub[u];
    }
    return sub;
}

// Assumes connected and 3 | n.  A cycle always detaches (grid cycles have
// length >= 4); a tree detaches iff some edge splits off a 0 mod 3 subtree.
bool graph_detachable(const AdjacencyGraph& g) {
    int n = static_cast<int>(g.vertices.size());
    if (g.edge_count() > n - 1) return true;
    std::vector<int> parent, order;
    bfs_tree(g, parent, order);
    auto sub = subtree_sizes(parent, order);
    for (int u = 1; u < n; ++u)
        if (sub[static_cast<std::size_t>(u)] % 3 == 0) return true;
    return false;
}

// Bridges of a mutable adjacency structure; lowlink without recursion.
std::set<std::pair<int, int>> find_bridges(const std::vector<std::set<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> tin(adj.size(), -1), low(adj.size(), 0), par(adj.size(), -1);
    std::set<std::pair<int, int>> out;
    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (tin[static_cast<std::size_t>(root)] >= 0) continue;
        tin[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        std::vector<std::pair<int, std::set<int>::const_iterator>> st;
        st.push_back({root, adj[static_cast<std::size_t>(root)].begin()});
        while (!st.empty()) {
            int v = st.back().first;
            auto& it = st.back().second;
            if (it == adj[static_cast<std::size_t>(v)].end()) {
                st.pop_back();
                if (!st.empty()) {
                    int p = st.back().first;
                    low[static_cast<std::size_t>(p)] =
                        std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
                    if (low[static_cast<std::size_t>(v)] > tin[static_cast<std::size_t>(p)])
                        out.insert({std::min(p, v), std::max(p, v)});
                }
                continue;
            }
            int u = *it;
            ++it;
            if (u == par[static_cast<std::size_t>(v)]) continue;
            if (tin[static_cast<std::size_t>(u)] >= 0) {
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], tin[static_cast<std::size_t>(u)]);
                continue;
            }
            par[static_cast<std::size_t>(u)] = v;
            tin[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
            st.push_back({u, adj[static_cast<std::size_t>(u)].begin()});
        }
    }
    return out;
}

std::pair<Cell, Cell> edge_cells(const AdjacencyGraph& g, int a, int b) {
    Cell ca = g.vertices[static_cast<std::size_t>(std::min(a, b))];
    Cell cb = g.vertices[static_cast<std::size_t>(std::max(a, b))];
    return {ca, cb};
}

} // namespace

int AdjacencyGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj) twice += nb.size();
    return static_cast<int>(twice / 2);
}

int AdjacencyGraph::index_of(Cell c) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), c);
    if (it == vertices.end() || *it != c) return -1;
    return static_cast<int>(it - vertices.begin());
}

AdjacencyGraph build_adjacency_graph(const Region& r) {
    AdjacencyGraph g;
    g.vertices = r.free_cells();
    g.adj.resize(g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (const Cell& d : kOrtho) {
            int j = g.index_of(g.vertices[i] + d);
            if (j >= 0) g.adj[i].push_back(j);
        }
        std::sort(g.adj[i].begin(), g.adj[i].end());
    }
    return g;
}

DetachCut find_detaching_cut(const AdjacencyGraph& g) {
    int n = static_cast<int>(g.vertices.size());
    if (n == 0) throw std::invalid_argument("find_detaching_cut: empty graph");
    if (!graph_connected(g)) throw DisconnectedRegion("find_detaching_cut: graph is not connected");
    if (n % 3 != 0)
        throw SizeNotDivisible("graph size " + std::to_string(n) + " is not divisible by 3");

    std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
    int m = 0;
    for (int u = 0; u < n; ++u)
        for (int v : g.adj[static_cast<std::size_t>(u)])
            if (u < v) {
                adj[static_cast<std::size_t>(u)].insert(v);
                adj[static_cast<std::size_t>(v)].insert(u);
                ++m;
            }

    // Phase 1: delete the smallest edge still on a cycle until at most one
    // cycle is left.
    while (m - n + 1 > 1) {
        auto bridges = find_bridges(adj);
        bool deleted = false;
        for (int u = 0; u < n && !deleted; ++u)
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (v < u || bridges.count({u, v})) continue;
                adj[static_cast<std::size_t>(u)].erase(v);
                adj[static_cast<std::size_t>(v)].erase(u);
                --m;
                deleted = true;
                break;
            }
        assert(deleted);
        (void)deleted;
    }

    std::vector<char> in_part0(static_cast<std::size_t>(n), 0);

    if (m == n - 1) {
        // Tree: the only possible cut is one edge with a 0 mod 3 subtree.
        std::vector<int> parent, order;
        bfs_tree(g, parent, order);
        auto sub = subtree_sizes(parent, order);
        int best = -1;
        std::pair<Cell, Cell> best_id{};
        for (int u = 1; u < n; ++u) {
            if (sub[static_cast<std::size_t>(u)] % 3 != 0) continue;
            auto id = edge_cells(g, u, parent[static_cast<std::size_t>(u)]);
            if (best < 0 || id < best_id) {
                best = u;
                best_id = id;
            }
        }
        if (best < 0)
            throw NotDetachable("tree has no edge that splits off a subtree of size 0 mod 3");
        std::vector<int> stack{best};
        in_part0[static_cast<std::size_t>(best)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.adj[static_cast<std::size_t>(u)])
                if (parent[static_cast<std::size_t>(v)] == u && !in_part0[static_cast<std::size_t>(v)]) {
                    in_part0[static_cast<std::size_t>(v)] = 1;
                    stack.push_back(v);
                }
        }
    } else {
        // Phase 2: exactly one cycle left.  Find it by peeling leaves.
        std::vector<int> deg(static_cast<std::size_t>(n));
        std::vector<int> queue;
        for (int u = 0; u < n; ++u) {
            deg[static_cast<std::size_t>(u)] = static_cast<int>(adj[static_cast<std::size_t>(u)].size());
            if (deg[static_cast<std::size_t>(u)] == 1) queue.push_back(u);
        }
        std::vector<char> peeled(static_cast<std::size_t>(n), 0);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            peeled[static_cast<std::size_t>(u)] = 1;
            for (int v : adj[static_cast<std::size_t>(u)])
                if (!peeled[static_cast<std::size_t>(v)] && --deg[static_cast<std::size_t>(v)] == 1)
                    queue.push_back(v);
        }

        std::vector<char> on_cycle(static_cast<std::size_t>(n), 0);
        int start = -1;
        for (int u = 0; u < n; ++u)
            if (!peeled[static_cast<std::size_t>(u)]) {
                on_cycle[static_cast<std::size_t>(u)] = 1;
                if (start < 0) start = u;
            }
        assert(start >= 0);

        // Walk the cycle from its smallest vertex, smaller neighbour first.
        std::vector<int> cyc{start};
        int prev = -1, cur = start;
        for (;;) {
            int next = -1;
            for (int v : adj[static_cast<std::size_t>(cur)])
                if (on_cycle[static_cast<std::size_t>(v)] && v != prev && (next < 0 || v < next))
                    next = v;
            if (next == start || next < 0) break;
            cyc.push_back(next);
            prev = cur;
            cur = next;
        }
        int k = static_cast<int>(cyc.size());
        assert(k >= 4);

        // Pendant tree size hanging at each cycle position.
        std::vector<int> weight(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i) {
            std::vector<int> stack{cyc[static_cast<std::size_t>(i)]};
            std::set<int> seen{cyc[static_cast<std::size_t>(i)]};
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v : adj[static_cast<std::size_t>(u)])
                    if (!on_cycle[static_cast<std::size_t>(v)] && !seen.count(v)) {
                        seen.insert(v);
                        stack.push_back(v);
                    }
            }
            weight[static_cast<std::size_t>(i)] = static_cast<int>(seen.size());
        }

        // Two equal prefix sums mod 3 exist because the cycle has length >= 4.
        std::vector<int> pre(static_cast<std::size_t>(k), 0);
        int acc = 0;
        for (int i = 0; i < k; ++i) {
            acc = (acc + weight[static_cast<std::size_t>(i)]) % 3;
            pre[static_cast<std::size_t>(i)] = acc;
        }
        int ci = -1, cj = -1;
        for (int i = 0; i < k && ci < 0; ++i)
            for (int j = i + 1; j < k; ++j)
                if (pre[static_cast<std::size_t>(i)] == pre[static_cast<std::size_t>(j)]) {
                    ci = i;
                    cj = j;
                    break;
                }
        assert(ci >= 0);

        // part0 = pendant trees of cycle positions ci+1 .. cj.
        for (int i = ci + 1; i <= cj; ++i) {
            std::vector<int> stack{cyc[static_cast<std::size_t>(i)]};
            in_part0[static_cast<std::size_t>(cyc[static_cast<std::size_t>(i)])] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v : adj[static_cast<std::size_t>(u)])
                    if (!on_cycle[static_cast<std::size_t>(v)] && !in_part0[static_cast<std::size_t>(v)]) {
                        in_part0[static_cast<std::size_t>(v)] = 1;
                        stack.push_back(v);
                    }
            }
        }
    }

    // The cut is every original edge between the halves; deleted edges that
    // landed inside one half are restored simply by not listing them.
    DetachCut cut;
    if (!in_part0[0])
        for (auto& f : in_part0) f = static_cast<char>(1 - f);
    for (int u = 0; u < n; ++u) {
        cut.parts[in_part0[static_cast<std::size_t>(u)] ? 0 : 1].push_back(
            g.vertices[static_cast<std::size_t>(u)]);
        for (int v : g.adj[static_cast<std::size_t>(u)])
            if (u < v && in_part0[static_cast<std::size_t>(u)] != in_part0[static_cast<std::size_t>(v)])
                cut.edges.push_back(edge_cells(g, u, v));
    }
    std::sort(cut.edges.begin(), cut.edges.end());
    assert(cut.parts[0].size() % 3 == 0 && !cut.parts[0].empty() && !cut.parts[1].empty());
    return cut;
}

bool is_detachable(const Region& r) {
    if (!r.defects().empty())
        throw std::invalid_argument("is_detachable: regions with defects are not supported");
    if (r.empty()) throw std::invalid_argument("is_detachable: empty region");
    if (r.size() % 3 != 0)
        throw SizeNotDivisible("region size " + std::to_string(r.size()) + " is not divisible by 3");
    return graph_detachable(build_adjacency_graph(r));
}

std::vector<int> DecompositionTree::leaf_ids() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].is_leaf()) out.push_back(static_cast<int>(i));
    return out;
}

std::string DecompositionTree::to_text() const {
    std::string out;
    std::function<void(int, int)> rec = [&](int id, int depth) {
        const DecompositionNode& nd = nodes[static_cast<std::size_t>(id)];
        out.append(static_cast<std::size_t>(2 * depth), ' ');
        if (nd.is_leaf()) {
            out += "leaf n=" + std::to_string(nd.region.size()) + "\n";
        } else {
            out += "split n=" + std::to_string(nd.region.size()) +
                   " cut_edges=" + std::to_string(nd.cut->edges.size()) + "\n";
            rec(nd.child[0], depth + 1);
            rec(nd.child[1], depth + 1);
        }
    };
    if (!nodes.empty()) rec(0, 0);
    return out;
}

DecompositionTree decompose(const Region& r) {
    if (!r.defects().empty())
        throw std::invalid_argument("decompose: regions with defects are not supported");
    if (r.empty()) throw std::invalid_argument("decompose: empty region");
    if (r.size() % 3 != 0)
        throw SizeNotDivisible("region size " + std::to_string(r.size()) + " is not divisible by 3");

    DecompositionTree t;
    t.nodes.push_back({r, std::nullopt, {-1, -1}});
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        AdjacencyGraph g = build_adjacency_graph(t.nodes[i].region);
        if (!graph_detachable(g)) continue;
        DetachCut cut = find_detaching_cut(g);
        Region part0(cut.parts[0]);
        Region part1(cut.parts[1]);
        int a = static_cast<int>(t.nodes.size());
        t.nodes[i].cut = std::move(cut);
        t.nodes[i].child = {a, a + 1};
        t.nodes.push_back({std::move(part0), std::nullopt, {-1, -1}});
        t.nodes.push_back({std::move(part1), std::nullopt, {-1, -1}});
    }
    return t;
}

std::string_view vertex_kind_name(VertexKind k) {
    switch (k) {
    case VertexKind::leaf: return "leaf";
    case VertexKind::trunk_straight: return "trunk-straight";
    case VertexKind::trunk_bended: return "trunk-bended";
    case VertexKind::fork_221: return "fork-221";
    case VertexKind::fork_212: return "fork-212";
    case VertexKind::cross_21: return "cross-21";
    case VertexKind::cross_24: return "cross-24";
    }
    return "?";
}

int VertexClass::tag_toward(Cell nb) const {
    for (const auto& [c, t] : tags)
        if (c == nb) return t;
    return -1;
}

std::map<Cell, VertexClass> classify_and_tag(const AdjacencyGraph& g) {
    int n = static_cast<int>(g.vertices.size());
    if (n == 0) throw std::invalid_argument("classify_and_tag: empty graph");
    if (!graph_connected(g)) throw NotATree("graph is not connected");
    if (g.edge_count() != n - 1)
        throw NotATree("graph has " + std::to_string(g.edge_count()) + " edges for " +
                       std::to_string(n) + " vertices");
    if (n % 3 != 0)
        throw SizeNotDivisible("tree size " + std::to_string(n) + " is not divisible by 3");

    std::vector<int> parent, order;
    bfs_tree(g, parent, order);
    auto sub = subtree_sizes(parent, order);

    std::map<Cell, VertexClass> out;
    for (int u = 0; u < n; ++u) {
        Cell cu = g.vertices[static_cast<std::size_t>(u)];
        VertexClass vc{};
        for (int v : g.adj[static_cast<std::size_t>(u)]) {
            // size of the component hanging off the v side once u is removed
            int comp = parent[static_cast<std::size_t>(v)] == u ? sub[static_cast<std::size_t>(v)]
                                                                : n - sub[static_cast<std::size_t>(u)];
            int tag = comp % 3;
            if (tag == 0)
                throw std::invalid_argument("tree is detachable at " + std::to_string(cu.x) + "," +
                                            std::to_string(cu.y) +
                                            "; classes exist only for non-detachable trees");
            vc.tags.push_back({g.vertices[static_cast<std::size_t>(v)], tag});
        }
        std::sort(vc.tags.begin(), vc.tags.end());

        int deg = static_cast<int>(vc.tags.size());
        switch (deg) {
        case 1:
            vc.kind = VertexKind::leaf;
            break;
        case 2: {
            Cell a = vc.tags[0].first, b = vc.tags[1].first;
            bool straight = a.x + b.x == 2 * cu.x && a.y + b.y == 2 * cu.y;
            vc.kind = straight ? VertexKind::trunk_straight : VertexKind::trunk_bended;
            break;
        }
        case 3: {
            // the stem is the arm whose opposite direction is missing
            int stem_tag = -1;
            for (const auto& [c, t] : vc.tags) {
                Cell opposite{2 * cu.x - c.x, 2 * cu.y - c.y};
                if (vc.tag_toward(opposite) < 0) stem_tag = t;
            }
            assert(stem_tag > 0);
            vc.kind = stem_tag == 1 ? VertexKind::fork_212 : VertexKind::fork_221;
            break;
        }
        case 4: {
            int twos = 0;
            for (const auto& [c, t] : vc.tags) twos += t == 2;
            if (twos == 4)
                vc.kind = VertexKind::cross_24;
            else if (twos == 1)
                vc.kind = VertexKind::cross_21;
            else
                throw std::logic_error("cross with unexpected tag multiset");
            break;
        }
        default:
            throw std::logic_error("grid tree vertex with degree " + std::to_string(deg));
        }
        out.emplace(cu, std::move(vc));
    }
    return out;
}

// ---- tiling of one non-detachable (tree-shaped) part -----------------------
//
// Each cell blows up into a 2x2 block.  In any L cover of the blown-up part a
// tromino either sits inside one block, straddles one tree edge (two cells on
// one side, one across), or bends around a corner touching three blocks.
// Counting cells mod 3 on the two sides of an edge forces exactly one tromino
// to cross each edge, covering exactly one cell in the block of the endpoint
// whose tag is 2 and two cells on the other side.  So per vertex there are
// few possibilities: a straddler eats its whole facing pair plus one cell
// across, a corner tromino eats one corner cell and one cell in each of two
// neighbouring blocks, and whatever three cells remain form one more tromino.
// A bottom-up pass keeps, per edge, which of the two candidate crossing cells
// admit a tiling of the subtree; the first consistent choice is emitted.

namespace {

std::array<Cell, 2> boundary_pair(Cell c, Cell d) {
    int bx = 2 * c.x, by = 2 * c.y;
    if (d == Cell{0, 1}) return {Cell{bx, by + 1}, Cell{bx + 1, by + 1}};
    if (d == Cell{0, -1}) return {Cell{bx, by}, Cell{bx + 1, by}};
    if (d == Cell{1, 0}) return {Cell{bx + 1, by}, Cell{bx + 1, by + 1}};
    return {Cell{bx, by}, Cell{bx, by + 1}};
}

struct EdgeRef {
    int v = -1;                // neighbour vertex id
    Cell dir;                  // unit step towards the neighbour
    int tag = 0;               // this endpoint's tag on the edge
    bool to_parent = false;
    std::array<Cell, 2> pair;  // both candidate crossing cells, sorted
};

struct LocalPick {
    std::vector<Placement> own;                    // trominoes this vertex contributes
    std::vector<std::pair<int, int>> child_state;  // (child vertex, crossing index)
};

// All ways to group some of the tag-1 edges into orthogonal pairs.
std::vector<std::vector<std::pair<int, int>>> elbow_matchings(const std::vector<int>& ones,
                                                              const std::vector<EdgeRef>& es) {
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> cur;
    std::vector<char> used(ones.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        while (i < ones.size() && used[i]) ++i;
        if (i == ones.size()) {
            out.push_back(cur);
            return;
        }
        used[i] = 1;
        rec(i + 1);  // leave single
        for (std::size_t j = i + 1; j < ones.size(); ++j) {
            if (used[j]) continue;
            Cell a = es[static_cast<std::size_t>(ones[i])].dir;
            Cell b = es[static_cast<std::size_t>(ones[j])].dir;
            if (a.x * b.x + a.y * b.y != 0) continue;  // need an actual corner
            used[j] = 1;
            cur.push_back({ones[i], ones[j]});
            rec(i + 1);
            cur.pop_back();
            used[j] = 0;
        }
        used[i] = 0;
    };
    rec(0);
    return out;
}

struct TreeTiler {
    const AdjacencyGraph& g;
    std::vector<std::vector<EdgeRef>> edges;
    std::vector<int> parent, order;
    std::vector<std::array<std::optional<LocalPick>, 2>> memo;

    explicit TreeTiler(const AdjacencyGraph& graph) : g(graph) {
        auto cls = classify_and_tag(g);
        bfs_tree(g, parent, order);
        edges.resize(g.vertices.size());
        for (std::size_t u = 0; u < g.vertices.size(); ++u) {
            Cell cu = g.vertices[u];
            for (int v : g.adj[u]) {
                EdgeRef e;
                e.v = v;
                e.dir = g.vertices[static_cast<std::size_t>(v)] - cu;
                e.tag = cls.at(cu).tag_toward(g.vertices[static_cast<std::size_t>(v)]);
                e.to_parent = parent[u] == v;
                e.pair = e.tag == 1
                             ? boundary_pair(g.vertices[static_cast<std::size_t>(v)], Cell{} - e.dir)
                             : boundary_pair(cu, e.dir);
                edges[u].push_back(e);
            }
        }
        memo.resize(g.vertices.size());
    }

    // pstate: crossing index imposed on the parent edge, -1 at the root.
    std::optional<LocalPick> try_local(int u, int pstate) const {
        const auto& es = edges[static_cast<std::size_t>(u)];
        Cell cu = g.vertices[static_cast<std::size_t>(u)];
        const std::array<Cell, 4> block{Cell{2 * cu.x, 2 * cu.y}, Cell{2 * cu.x, 2 * cu.y + 1},
                                        Cell{2 * cu.x + 1, 2 * cu.y},
                                        Cell{2 * cu.x + 1, 2 * cu.y + 1}};
        std::vector<int> ones, twos;
        for (int i = 0; i < static_cast<int>(es.size()); ++i)
            (es[static_cast<std::size_t>(i)].tag == 1 ? ones : twos).push_back(i);

        auto allowed = [&](int ei, int s) {
            const EdgeRef& e = es[static_cast<std::size_t>(ei)];
            if (e.to_parent) return s == pstate;
            return memo[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(s)].has_value();
        };

        struct Corner {
            int e1, e2;
            Cell corner, c1, c2;
            int s1, s2;
        };

        for (const auto& matching : elbow_matchings(ones, es)) {
            std::vector<Corner> corners;
            std::vector<char> paired(es.size(), 0);
            bool ok = true;
            for (auto [i, j] : matching) {
                const EdgeRef& a = es[static_cast<std::size_t>(i)];
                const EdgeRef& b = es[static_cast<std::size_t>(j)];
                Cell dh = a.dir.x != 0 ? a.dir : b.dir;
                Cell dv = a.dir.x != 0 ? b.dir : a.dir;
                Cell corner{2 * cu.x + (dh.x > 0 ? 1 : 0), 2 * cu.y + (dv.y > 0 ? 1 : 0)};
                Cell ca = corner + a.dir;
                Cell cb = corner + b.dir;
                int sa = ca == a.pair[0] ? 0 : 1;
                int sb = cb == b.pair[0] ? 0 : 1;
                assert(ca == a.pair[static_cast<std::size_t>(sa)] &&
                       cb == b.pair[static_cast<std::size_t>(sb)]);
                if (!allowed(i, sa) || !allowed(j, sb)) {
                    ok = false;
                    break;
                }
                corners.push_back({i, j, corner, ca, cb, sa, sb});
                paired[static_cast<std::size_t>(i)] = paired[static_cast<std::size_t>(j)] = 1;
            }
            if (!ok) continue;

            std::vector<int> vars;  // unpaired 1-edges first, then 2-edges
            for (int i : ones)
                if (!paired[static_cast<std::size_t>(i)]) vars.push_back(i);
            std::size_t n_singles = vars.size();
            vars.insert(vars.end(), twos.begin(), twos.end());

            std::vector<int> choice(vars.size(), 0);
            for (;;) {
                bool feasible = true;
                for (std::size_t i = 0; i < vars.size() && feasible; ++i)
                    feasible = allowed(vars[i], choice[i]);
                if (feasible) {
                    std::vector<Cell> consumed;
                    for (const auto& co : corners) consumed.push_back(co.corner);
                    for (std::size_t i = 0; i < vars.size(); ++i) {
                        const EdgeRef& e = es[static_cast<std::size_t>(vars[i])];
                        if (i < n_singles) {
                            auto up = boundary_pair(cu, e.dir);
                            consumed.push_back(up[0]);
                            consumed.push_back(up[1]);
                        } else {
                            consumed.push_back(e.pair[static_cast<std::size_t>(choice[i])]);
                        }
                    }
                    std::sort(consumed.begin(), consumed.end());
                    if (std::adjacent_find(consumed.begin(), consumed.end()) == consumed.end()) {
                        std::vector<Cell> leftover;
                        for (const Cell& c : block)
                            if (!std::binary_search(consumed.begin(), consumed.end(), c))
                                leftover.push_back(c);
                        if (leftover.size() == 0 || leftover.size() == 3) {
                            LocalPick pick;
                            for (const auto& co : corners) {
                                auto pl = placement_from_cells({co.corner, co.c1, co.c2});
                                assert(pl);
                                pick.own.push_back(*pl);
                                const EdgeRef& a = es[static_cast<std::size_t>(co.e1)];
                                const EdgeRef& b = es[static_cast<std::size_t>(co.e2)];
                                if (!a.to_parent) pick.child_state.push_back({a.v, co.s1});
                                if (!b.to_parent) pick.child_state.push_back({b.v, co.s2});
                            }
                            for (std::size_t i = 0; i < vars.size(); ++i) {
                                const EdgeRef& e = es[static_cast<std::size_t>(vars[i])];
                                if (i < n_singles) {
                                    auto up = boundary_pair(cu, e.dir);
                                    auto pl = placement_from_cells(
                                        {up[0], up[1], e.pair[static_cast<std::size_t>(choice[i])]});
                                    assert(pl);
                                    pick.own.push_back(*pl);
                                }
                                if (!e.to_parent) pick.child_state.push_back({e.v, choice[i]});
                            }
                            if (leftover.size() == 3) {
                                auto pl = placement_from_cells({leftover[0], leftover[1], leftover[2]});
                                assert(pl);
                                pick.own.push_back(*pl);
                            }
                            return pick;
                        }
                    }
                }
                std::size_t p = 0;
                while (p < choice.size() && choice[p] == 1) choice[p++] = 0;
                if (p == choice.size()) break;
                choice[p] = 1;
            }
        }
        return std::nullopt;
    }

    Tiling run() {
        for (std::size_t i = order.size(); i-- > 1;) {
            int u = order[i];
            memo[static_cast<std::size_t>(u)][0] = try_local(u, 0);
            memo[static_cast<std::size_t>(u)][1] = try_local(u, 1);
        }
        auto root = try_local(order[0], -1);
        if (!root)
            throw std::logic_error("non-detachable part admits no cover; pattern search failed");
        Tiling out;
        std::vector<const LocalPick*> work{&*root};
        while (!work.empty()) {
            const LocalPick* p = work.back();
            work.pop_back();
            out.placements.insert(out.placements.end(), p->own.begin(), p->own.end());
            for (auto [v, s] : p->child_state)
                work.push_back(&*memo[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)]);
        }
        return out;
    }
};

} // namespace

Tiling tile_boxplus(const Region& r) {
    if (!r.defects().empty())
        throw std::invalid_argument("tile_boxplus: regions with defects are not supported");
    if (r.empty()) throw std::invalid_argument("tile_boxplus: empty region");
    if (r.size() % 3 != 0)
        throw SizeNotDivisible("region size " + std::to_string(r.size()) + " is not divisible by 3");

    DecompositionTree dec = decompose(r);
    Tiling out;
    for (int id : dec.leaf_ids()) {
        AdjacencyGraph g = build_adjacency_graph(dec.nodes[static_cast<std::size_t>(id)].region);
        Tiling part = TreeTiler(g).run();
        out.placements.insert(out.placements.end(), part.placements.begin(),
                              part.placements.end());
    }
    out.sort();
    auto report = validate_tiling(subdivide_boxplus(r), out);
    if (!report.ok) throw std::logic_error("assembled cover is invalid: " + report.violation);
    assert(out.size() * 3 == static_cast<std::size_t>(r.size()) * 4);
    return out;
}

} // namespace trom
