#include "trom/tromino180.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>

#include "trom/errors.hpp"

namespace trom {

namespace {

bool adjacent(const std::vector<std::vector<int>>& adj, int u, int v) {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

} // namespace

std::size_t RegionGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj) twice += nb.size();
    return twice / 2;
}

int RegionGraph::index_of(Cell c) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), c);
    if (it == vertices.end() || *it != c) return -1;
    return static_cast<int>(it - vertices.begin());
}

std::size_t IntersectionGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj) twice += nb.size();
    return twice / 2;
}

RegionGraph build_region_graph(const Region& r) {
    RegionGraph g;
    g.vertices = r.free_cells();
    const int n = static_cast<int>(g.vertices.size());
    std::unordered_map<Cell, int> index;
    index.reserve(g.vertices.size());
    for (int i = 0; i < n; ++i) index[g.vertices[i]] = i;
    g.adj.resize(n);
    const Cell steps[3] = {{1, 0}, {0, 1}, {1, 1}};  // orthogonal + main diagonal
    for (int i = 0; i < n; ++i) {
        for (Cell d : steps) {
            auto it = index.find(g.vertices[i] + d);
            if (it == index.end()) continue;
            g.adj[i].push_back(it->second);
            g.adj[it->second].push_back(i);
        }
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

IntersectionGraph build_intersection_graph(const RegionGraph& g) {
    IntersectionGraph ig;
    const int n = static_cast<int>(g.vertices.size());
    for (int u = 0; u < n; ++u) {
        const auto& nb = g.adj[u];
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (nb[i] <= u) continue;
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (!adjacent(g.adj, nb[i], nb[j])) continue;
                Triangle t;
                t.vertices = {u, nb[i], nb[j]};
                auto p = placement_from_cells(
                    {g.vertices[u], g.vertices[nb[i]], g.vertices[nb[j]]});
                if (!p || !PieceSet::RIGHT_180.contains(p->shape))
                    throw std::logic_error("graph triangle does not match a right tromino");
                t.placement = *p;
                ig.triangles.push_back(t);
            }
        }
    }
    std::sort(ig.triangles.begin(), ig.triangles.end(), [](const Triangle& a, const Triangle& b) {
        if (a.placement.anchor != b.placement.anchor) return a.placement.anchor < b.placement.anchor;
        return a.placement.shape < b.placement.shape;
    });
    const int m = static_cast<int>(ig.triangles.size());
    ig.adj.resize(m);
    std::vector<std::vector<int>> at_vertex(n);
    for (int t = 0; t < m; ++t)
        for (int v : ig.triangles[t].vertices) at_vertex[v].push_back(t);
    for (const auto& ts : at_vertex)
        for (std::size_t i = 0; i < ts.size(); ++i)
            for (std::size_t j = i + 1; j < ts.size(); ++j) {
                ig.adj[ts[i]].push_back(ts[j]);
                ig.adj[ts[j]].push_back(ts[i]);
            }
    for (auto& nb : ig.adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return ig;
}

std::optional<Claw> find_claw(const IntersectionGraph& ig) {
    const int n = static_cast<int>(ig.adj.size());
    for (int c = 0; c < n; ++c) {
        const auto& nb = ig.adj[c];
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (adjacent(ig.adj, nb[i], nb[j])) continue;
                for (std::size_t k = j + 1; k < nb.size(); ++k) {
                    if (adjacent(ig.adj, nb[i], nb[k])) continue;
                    if (adjacent(ig.adj, nb[j], nb[k])) continue;
                    return Claw{c, {nb[i], nb[j], nb[k]}};
                }
            }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// forbidden patterns

namespace {

std::array<Cell, 3> sorted_cells(const Placement& p) {
    auto c = p.covered();
    std::sort(c.begin(), c.end());
    return c;
}

// All right-oriented placements covering cell c (six of them).
std::vector<Placement> right_placements_on(Cell c) {
    std::vector<Placement> out;
    for (ShapeKind k : {ShapeKind::LA, ShapeKind::LB})
        for (Cell off : shape_offsets(k)) out.push_back({k, c - off});
    return out;
}

int shared_cells(const std::array<Cell, 3>& a, const std::array<Cell, 3>& b) {
    int n = 0;
    for (Cell c : a) n += std::find(b.begin(), b.end(), c) != b.end();
    return n;
}

// Unions of a center triangle with three leaves, one leaf per center cell,
// each leaf meeting the center in that single cell and missing the others.
// These 9-cell sets are exactly the patterns that put a claw in the
// intersection graph.
std::set<std::vector<Cell>> claw_unions() {
    std::set<std::vector<Cell>> out;
    for (ShapeKind center_kind : {ShapeKind::LA, ShapeKind::LB}) {
        Placement center{center_kind, {0, 0}};
        auto cc = sorted_cells(center);
        std::array<std::vector<Placement>, 3> leaves;
        for (int i = 0; i < 3; ++i)
            for (const Placement& p : right_placements_on(cc[i])) {
                if (p == center) continue;
                if (shared_cells(sorted_cells(p), cc) == 1) leaves[i].push_back(p);
            }
        for (const Placement& p0 : leaves[0])
            for (const Placement& p1 : leaves[1])
                for (const Placement& p2 : leaves[2]) {
                    auto c0 = sorted_cells(p0), c1 = sorted_cells(p1), c2 = sorted_cells(p2);
                    if (shared_cells(c0, c1) || shared_cells(c0, c2) || shared_cells(c1, c2))
                        continue;
                    std::vector<Cell> cells(cc.begin(), cc.end());
                    cells.insert(cells.end(), c0.begin(), c0.end());
                    cells.insert(cells.end(), c1.begin(), c1.end());
                    cells.insert(cells.end(), c2.begin(), c2.end());
                    cells = normalize_cells(cells);
                    if (cells.size() != 9)
                        throw std::logic_error("claw union is not 9 cells");
                    out.insert(cells);
                }
    }
    return out;
}

// Quotient generators.  Shears on both axes are needed: x-shears alone keep
// every row a row, so they can never relate a pattern to its transpose and
// the class count comes out doubled.
const Transform kQuotientGens[7] = {
    Transform::rotate180(), Transform::reflect_x(), Transform::reflect_y(),
    Transform::shear_x(1),  Transform::shear_x(-1), Transform::shear_y(1),
    Transform::shear_y(-1)};

struct CatalogBuilder {
    std::vector<std::vector<Cell>> polys;  // combined: right unions + mirrors
    std::map<std::vector<Cell>, int> index;
    std::set<int> right;  // indices of right-claw unions
    std::vector<int> parent;

    int root(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void join(int a, int b) { parent[root(a)] = root(b); }

    std::vector<ForbiddenClass> build() {
        for (const auto& cells : claw_unions()) {
            right.insert(static_cast<int>(polys.size()));
            index[cells] = static_cast<int>(polys.size());
            polys.push_back(cells);
        }
        const int n_right = static_cast<int>(polys.size());
        for (int i = 0; i < n_right; ++i) {
            auto mirrored = normalize_cells(apply_transform(polys[i], Transform::reflect_x()));
            if (!index.count(mirrored)) {
                index[mirrored] = static_cast<int>(polys.size());
                polys.push_back(mirrored);
            }
        }
        parent.resize(polys.size());
        std::iota(parent.begin(), parent.end(), 0);

        for (std::size_t i = 0; i < polys.size(); ++i)
            for (const Transform& t : kQuotientGens) {
                auto image = normalize_cells(apply_transform(polys[i], t));
                auto it = index.find(image);
                if (it != index.end()) join(static_cast<int>(i), it->second);
            }

        std::map<int, std::vector<int>> members;  // root -> member indices
        for (std::size_t i = 0; i < polys.size(); ++i) members[root(static_cast<int>(i))].push_back(static_cast<int>(i));

        std::vector<ForbiddenClass> classes;
        for (auto& entry : members) {
            const std::vector<int>& mem = entry.second;
            ForbiddenClass cls;
            int rep = -1;
            for (int m : mem)
                if (right.count(m) && (rep < 0 || polys[m] < polys[rep])) rep = m;
            if (rep < 0) throw std::logic_error("pattern class without a right-oriented member");
            cls.representative = polys[rep];
            cls.variants = trace_variants(rep, mem);
            classes.push_back(std::move(cls));
        }
        std::sort(classes.begin(), classes.end(), [](const ForbiddenClass& a, const ForbiddenClass& b) {
            return a.representative < b.representative;
        });
        for (std::size_t i = 0; i < classes.size(); ++i) classes[i].class_id = static_cast<int>(i) + 1;
        if (classes.size() != 5)
            throw std::logic_error("expected 5 pattern classes, generated " +
                                   std::to_string(classes.size()));
        return classes;
    }

    // BFS over the class recording an exact transform chain per member.
    std::vector<ForbiddenVariant> trace_variants(int rep, const std::vector<int>& mem) {
        std::set<int> in_class(mem.begin(), mem.end());
        std::map<int, std::vector<Transform>> path;
        path[rep] = {};
        std::vector<int> queue{rep};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (const Transform& t : kQuotientGens) {
                auto raw = apply_transform(polys[u], t);
                auto image = normalize_cells(raw);
                auto it = index.find(image);
                if (it == index.end() || !in_class.count(it->second) || path.count(it->second))
                    continue;
                Cell lo = raw[0];
                for (Cell c : raw) lo = {std::min(lo.x, c.x), std::min(lo.y, c.y)};
                auto chain = path[u];
                chain.push_back(t);
                chain.push_back(Transform::translate(-lo.x, -lo.y));
                path[it->second] = std::move(chain);
                queue.push_back(it->second);
            }
        }
        std::vector<ForbiddenVariant> variants;
        for (int m : mem) {
            if (!right.count(m)) continue;  // only right-claw patterns are searched for
            if (!path.count(m)) throw std::logic_error("pattern variant unreachable from representative");
            variants.push_back({polys[m], path[m]});
        }
        std::sort(variants.begin(), variants.end(), [](const ForbiddenVariant& a, const ForbiddenVariant& b) {
            return a.cells < b.cells;
        });
        return variants;
    }
};

} // namespace

const std::vector<ForbiddenClass>& forbidden_catalog() {
    static const std::vector<ForbiddenClass> catalog = CatalogBuilder{}.build();
    return catalog;
}

std::vector<ForbiddenOccurrence> detect_forbidden(const Region& r) {
    std::vector<ForbiddenOccurrence> out;
    const auto free = r.free_cells();
    std::set<Cell> free_set(free.begin(), free.end());
    for (const ForbiddenClass& cls : forbidden_catalog())
        for (const ForbiddenVariant& v : cls.variants)
            for (Cell base : free) {
                Cell off = base - v.cells.front();
                bool fits = true;
                for (Cell c : v.cells)
                    if (!free_set.count(c + off)) {
                        fits = false;
                        break;
                    }
                if (!fits) continue;
                ForbiddenOccurrence occ;
                occ.class_id = cls.class_id;
                occ.transform = v.from_representative;
                occ.transform.push_back(Transform::translate(off.x, off.y));
                occ.cells.reserve(v.cells.size());
                for (Cell c : v.cells) occ.cells.push_back(c + off);
                out.push_back(std::move(occ));
            }
    std::sort(out.begin(), out.end(), [](const ForbiddenOccurrence& a, const ForbiddenOccurrence& b) {
        if (a.cells != b.cells) return a.cells < b.cells;
        return a.class_id < b.class_id;
    });
    return out;
}

// ---------------------------------------------------------------------------
// independent sets

namespace {

class MisBB {
public:
    MisBB(const std::vector<std::vector<int>>& adj, std::uint64_t budget)
        : adj_(adj), n_(static_cast<int>(adj.size())), alive_(n_, 1), budget_(budget) {}

    std::vector<int> run() {
        std::vector<int> cur;
        dfs(cur, n_);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    const std::vector<std::vector<int>>& adj_;
    int n_;
    std::vector<char> alive_;
    std::vector<int> best_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;

    void tick() {
        if (++nodes_ > budget_) throw ResourceLimit("independent-set search exceeded node budget");
    }

    void dfs(std::vector<int>& cur, int alive_count) {
        if (cur.size() + alive_count <= best_.size()) return;
        // pick the liveliest vertex; isolated survivors are all forced in
        int pick = -1, pick_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (!alive_[v]) continue;
            int d = 0;
            for (int u : adj_[v]) d += alive_[u];
            if (d > pick_deg) {
                pick = v;
                pick_deg = d;
            }
        }
        if (pick < 0) {
            if (cur.size() > best_.size()) best_ = cur;
            return;
        }
        if (pick_deg == 0) {
            std::size_t added = cur.size();
            for (int v = 0; v < n_; ++v)
                if (alive_[v]) cur.push_back(v);
            if (cur.size() > best_.size()) best_ = cur;
            cur.resize(added);
            return;
        }
        tick();
        // include pick
        std::vector<int> removed{pick};
        alive_[pick] = 0;
        for (int u : adj_[pick])
            if (alive_[u]) {
                alive_[u] = 0;
                removed.push_back(u);
            }
        cur.push_back(pick);
        dfs(cur, alive_count - static_cast<int>(removed.size()));
        cur.pop_back();
        for (int v : removed) alive_[v] = 1;
        // exclude pick
        alive_[pick] = 0;
        dfs(cur, alive_count - 1);
        alive_[pick] = 1;
    }
};

} // namespace

std::vector<int> mis_exact(const IntersectionGraph& ig, const SolverOptions& opt) {
    return MisBB(ig.adj, opt.node_budget).run();
}

namespace {

// Reduction pipeline state: adjacency over live vertex ids (originals plus
// ids minted by struction steps).
struct PipeGraph {
    std::map<int, std::set<int>> adj;
    int next_id = 0;

    void remove_vertex(int v) {
        for (int u : adj[v]) adj[u].erase(v);
        adj.erase(v);
    }
    bool is_clique(const std::set<int>& vs) const {
        for (auto i = vs.begin(); i != vs.end(); ++i)
            for (auto j = std::next(i); j != vs.end(); ++j)
                if (!adj.at(*i).count(*j)) return false;
        return true;
    }
};

struct TakeStep {
    int v;
};
struct StructionStep {
    int v0;
    std::vector<int> nbrs;                          // sorted
    std::vector<std::array<int, 3>> created;        // {new_id, i, k}, i < k index nbrs
};
using PipeStep = std::variant<TakeStep, StructionStep>;

// Replaces N[v0] by one vertex per non-adjacent neighbour pair; the biggest
// independent set shrinks by exactly one and is recoverable from the ids.
void apply_struction(PipeGraph& g, int v0, std::vector<PipeStep>& steps) {
    std::vector<int> nbrs(g.adj[v0].begin(), g.adj[v0].end());
    const int p = static_cast<int>(nbrs.size());
    std::map<int, std::set<int>> old_nb;
    for (int v : nbrs) old_nb[v] = g.adj[v];
    g.remove_vertex(v0);
    for (int v : nbrs) g.remove_vertex(v);

    StructionStep step{v0, nbrs, {}};
    for (int i = 0; i < p; ++i)
        for (int k = i + 1; k < p; ++k)
            if (!old_nb[nbrs[i]].count(nbrs[k]))
                step.created.push_back({g.next_id++, i, k});

    for (const auto& [id, i, k] : step.created) {
        auto& nb = g.adj[id];  // creates the vertex
        for (int w : old_nb[nbrs[i]])
            if (g.adj.count(w) && w != id) nb.insert(w);
        for (int w : old_nb[nbrs[k]])
            if (g.adj.count(w) && w != id) nb.insert(w);
        for (int w : nb) g.adj[w].insert(id);
    }
    for (std::size_t a = 0; a < step.created.size(); ++a)
        for (std::size_t b = a + 1; b < step.created.size(); ++b) {
            const auto& [id_a, i_a, k_a] = step.created[a];
            const auto& [id_b, i_b, k_b] = step.created[b];
            bool edge = i_a != i_b ? true : old_nb[nbrs[k_a]].count(nbrs[k_b]) > 0;
            if (edge) {
                g.adj[id_a].insert(id_b);
                g.adj[id_b].insert(id_a);
            } else {
                g.adj[id_a].erase(id_b);
                g.adj[id_b].erase(id_a);
            }
        }
    steps.push_back(std::move(step));
}

std::vector<int> pipeline_fallback(const PipeGraph& g) {
    std::vector<int> ids;
    for (const auto& [v, nb] : g.adj) ids.push_back(v);
    std::vector<std::vector<int>> adj(ids.size());
    std::map<int, int> compress;
    for (std::size_t i = 0; i < ids.size(); ++i) compress[ids[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (int u : g.adj.at(ids[i])) adj[i].push_back(compress[u]);
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    auto sol = MisBB(adj, std::numeric_limits<std::uint64_t>::max()).run();
    std::vector<int> out;
    for (int v : sol) out.push_back(ids[v]);
    return out;
}

} // namespace

std::vector<int> mis_claw_free(const IntersectionGraph& ig) {
    if (auto claw = find_claw(ig))
        throw NotClawFree("intersection graph has an induced claw at vertex " +
                          std::to_string(claw->center));

    PipeGraph g;
    const int n = static_cast<int>(ig.adj.size());
    g.next_id = n;
    for (int v = 0; v < n; ++v) {
        auto& nb = g.adj[v];
        for (int u : ig.adj[v]) nb.insert(u);
    }

    std::vector<PipeStep> steps;
    std::vector<int> leftover;
    while (!g.adj.empty()) {
        // isolated vertex: always in some maximum set
        int found = -1;
        for (const auto& [v, nb] : g.adj)
            if (nb.empty()) {
                found = v;
                break;
            }
        if (found >= 0) {
            steps.push_back(TakeStep{found});
            g.remove_vertex(found);
            continue;
        }
        // simplicial vertex: take it, drop its clique
        for (const auto& [v, nb] : g.adj)
            if (g.is_clique(nb)) {
                found = v;
                break;
            }
        if (found >= 0) {
            steps.push_back(TakeStep{found});
            auto nbrs = g.adj[found];
            g.remove_vertex(found);
            for (int u : nbrs) g.remove_vertex(u);
            continue;
        }
        // vertex dominated by a neighbour: swapping v for u never loses, so
        // drop v (u must be adjacent, or u could sit in the same set as v)
        for (const auto& [v, nbv] : g.adj) {
            for (int u : nbv) {
                bool dominates = true;
                for (int w : g.adj.at(u))
                    if (w != v && !nbv.count(w)) {
                        dominates = false;
                        break;
                    }
                if (dominates) {
                    found = v;
                    break;
                }
            }
            if (found >= 0) break;
        }
        if (found >= 0) {
            g.remove_vertex(found);
            continue;
        }
        // struction at a minimum-degree vertex, as long as it does not grow
        int v0 = -1;
        std::size_t deg = 0;
        for (const auto& [v, nb] : g.adj)
            if (v0 < 0 || nb.size() < deg) {
                v0 = v;
                deg = nb.size();
            }
        std::size_t anti = 0;
        {
            std::vector<int> nbrs(g.adj[v0].begin(), g.adj[v0].end());
            for (std::size_t i = 0; i < nbrs.size(); ++i)
                for (std::size_t k = i + 1; k < nbrs.size(); ++k)
                    if (!g.adj[nbrs[i]].count(nbrs[k])) ++anti;
        }
        if (anti <= deg + 1) {
            apply_struction(g, v0, steps);
            continue;
        }
        // dense leftover: finish it exactly
        leftover = pipeline_fallback(g);
        g.adj.clear();
    }

    std::set<int> sel(leftover.begin(), leftover.end());
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (const TakeStep* take = std::get_if<TakeStep>(&*it)) {
            sel.insert(take->v);
            continue;
        }
        const StructionStep& st = std::get<StructionStep>(*it);
        std::vector<std::array<int, 3>> chosen;
        for (const auto& c : st.created)
            if (sel.count(c[0])) chosen.push_back(c);
        if (chosen.empty()) {
            sel.insert(st.v0);
            continue;
        }
        int i0 = chosen.front()[1];
        for (const auto& c : chosen) {
            if (c[1] != i0) throw std::logic_error("struction recovery hit mixed pairs");
            sel.erase(c[0]);
            sel.insert(st.nbrs[c[2]]);
        }
        sel.insert(st.nbrs[i0]);
    }
    for (int v : sel)
        if (v >= n) throw std::logic_error("struction recovery left a synthetic vertex");
    return {sel.begin(), sel.end()};
}

// ---------------------------------------------------------------------------
// cover decision

Decision180 decide_180_cover(const Region& r, const SolverOptions& opt) {
    Decision180 out;
    const std::size_t n = r.free_size();
    if (n % 3 != 0) return out;
    if (n == 0) {
        out.covered = true;
        out.witness = Tiling{};
        return out;
    }
    auto ig = build_intersection_graph(build_region_graph(r));
    std::vector<int> mis =
        detect_forbidden(r).empty() ? mis_claw_free(ig) : mis_exact(ig, opt);
    if (mis.size() * 3 != n) return out;
    Tiling t;
    t.placements.reserve(mis.size());
    for (int id : mis) t.placements.push_back(ig.triangles[id].placement);
    t.sort();
    if (auto rep = validate_tiling(r, t); !rep.ok)
        throw std::logic_error("independent set is not a cover: " + rep.violation);
    out.covered = true;
    out.witness = std::move(t);
    return out;
}

Decision180 decide_180_cover_left(const Region& r, const SolverOptions& opt) {
    auto flip = [](const std::vector<Cell>& cs) {
        std::vector<Cell> out;
        out.reserve(cs.size());
        for (Cell c : cs) out.push_back({-c.x, c.y});
        return out;
    };
    Region mirrored(flip(r.cells()), flip(r.defects()));
    Decision180 d = decide_180_cover(mirrored, opt);
    if (d.covered && d.witness) {
        Tiling t;
        t.placements.reserve(d.witness->size());
        for (const Placement& p : d.witness->placements) {
            auto q = transform_placement(p, Transform::reflect_x());
            if (!q) throw std::logic_error("mirrored placement tore");
            t.placements.push_back(*q);
        }
        t.sort();
        if (auto rep = validate_tiling(r, t); !rep.ok)
            throw std::logic_error("mirrored witness is not a cover: " + rep.violation);
        d.witness = std::move(t);
    }
    return d;
}

std::string region_graph_edge_list(const RegionGraph& g) {
    std::string out;
    for (std::size_t i = 0; i < g.adj.size(); ++i)
        for (int j : g.adj[i]) {
            if (j <= static_cast<int>(i)) continue;
            Cell a = g.vertices[i], b = g.vertices[j];
            out += std::to_string(a.x) + "," + std::to_string(a.y) + " -- " +
                   std::to_string(b.x) + "," + std::to_string(b.y) + "\n";
        }
    return out;
}

std::string intersection_graph_edge_list(const IntersectionGraph& ig) {
    std::string out;
    for (std::size_t i = 0; i < ig.adj.size(); ++i)
        for (int j : ig.adj[i]) {
            if (j <= static_cast<int>(i)) continue;
            out += "t" + std::to_string(i) + " -- t" + std::to_string(j) + "\n";
        }
    return out;
}

} // namespace trom
