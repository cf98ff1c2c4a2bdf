#include "quad/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace quad {

SimpleGraph SimpleGraph::complete(int n) {
    SimpleGraph g;
    g.n = n;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.edges.push_back({u, v});
    return g;
}

SimpleGraph SimpleGraph::minus(const std::vector<EdgeKey>& removed) const {
    SimpleGraph g;
    g.n = n;
    std::set<EdgeKey> rm;
    for (auto e : removed) rm.insert(edge_key(e.first, e.second));
    for (const auto& e : edges)
        if (!rm.count(e)) g.edges.push_back(e);
    return g;
}

bool SimpleGraph::has_edge(VertexId u, VertexId v) const {
    return std::binary_search(edges.begin(), edges.end(), edge_key(u, v));
}

int SimpleGraph::degree(VertexId v) const {
    int d = 0;
    for (const auto& e : edges) d += (e.first == v || e.second == v);
    return d;
}

std::vector<Square> enumerate_quadrilaterals(const SimpleGraph& g) {
    std::vector<Square> out;
    // a < b,c,d and b < d kills rotations and reflections
    for (int a = 1; a <= g.n; ++a)
        for (int b = a + 1; b <= g.n; ++b) {
            if (!g.has_edge(a, b)) continue;
            for (int c = 1; c <= g.n; ++c) {
                if (c == a || c == b || c < a || !g.has_edge(b, c)) continue;
                for (int d = b + 1; d <= g.n; ++d) {
                    if (d == a || d == c) continue;
                    if (g.has_edge(c, d) && g.has_edge(d, a)) out.push_back(Square(a, b, c, d));
                }
            }
        }
    return out;
}

bool pattern_matches(const FacePattern& pat, const Square& sq) {
    if (pat.size() != 4 || sq.v.size() != 4) return false;
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<VertexId> seq = sq.v;
        if (dir) std::reverse(seq.begin(), seq.end());
        for (int s = 0; s < 4; ++s) {
            bool ok = true;
            for (int i = 0; i < 4 && ok; ++i) {
                VertexId want = pat[i];
                if (want != 0 && seq[(s + i) % 4] != want) ok = false;
            }
            if (ok) return true;
        }
    }
    return false;
}

std::optional<Embedding> assemble(const SimpleGraph& g, const std::vector<Square>& faces) {
    const int n = g.n;
    // corner links per vertex
    std::vector<std::vector<std::pair<VertexId, VertexId>>> links(n + 1);
    for (const auto& f : faces) {
        for (int i = 0; i < 4; ++i) {
            VertexId prev = f.v[(i + 3) % 4], v = f.v[i], next = f.v[(i + 1) % 4];
            links[v].push_back({prev, next});
        }
    }
    std::vector<std::vector<VertexId>> order(n + 1);
    for (int v = 1; v <= n; ++v) {
        std::map<VertexId, std::vector<VertexId>> adj;
        for (auto& [a, b] : links[v]) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        int deg = g.degree(v);
        if (static_cast<int>(links[v].size()) != deg) return std::nullopt;
        if (static_cast<int>(adj.size()) != deg) return std::nullopt;
        for (auto& [u, ns] : adj)
            if (ns.size() != 2) return std::nullopt;
        VertexId start = adj.begin()->first;
        VertexId prev = start, cur = adj[start][0];
        std::vector<VertexId> cyc{start};
        while (cur != start) {
            cyc.push_back(cur);
            VertexId nxt = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
        }
        if (static_cast<int>(cyc.size()) != deg) return std::nullopt;
        order[v] = std::move(cyc);
    }
    // Corner orientations against the reference rotations; signs from them.
    auto pred_succ = [&](VertexId v, VertexId from) {
        const auto& r = order[v];
        int d = static_cast<int>(r.size());
        for (int i = 0; i < d; ++i)
            if (r[i] == from)
                return std::pair<VertexId, VertexId>{r[(i - 1 + d) % d], r[(i + 1) % d]};
        return std::pair<VertexId, VertexId>{0, 0};
    };
    std::map<EdgeKey, int> lambda;
    for (const auto& f : faces) {
        int ohat[4];
        for (int i = 0; i < 4; ++i) {
            VertexId a = f.v[(i + 3) % 4], v = f.v[i], b = f.v[(i + 1) % 4];
            auto [pr, su] = pred_succ(v, a);
            if (pr == 0) return std::nullopt;
            if (b == pr)
                ohat[i] = +1;
            else if (b == su)
                ohat[i] = -1;
            else
                return std::nullopt;
        }
        for (int i = 0; i < 4; ++i) {
            EdgeKey ek = edge_key(f.v[i], f.v[(i + 1) % 4]);
            int req = ohat[i] * ohat[(i + 1) % 4];
            auto it = lambda.find(ek);
            if (it == lambda.end())
                lambda[ek] = req;
            else if (it->second != req)
                return std::nullopt;
        }
    }
    std::vector<std::vector<Arc>> rot(n);
    for (int v = 1; v <= n; ++v) {
        for (VertexId u : order[v]) rot[v - 1].push_back({u, lambda.at(edge_key(u, v))});
    }
    try {
        Embedding emb(rot);
        // Soundness: the assembled system reproduces the face multiset.
        std::multiset<std::vector<VertexId>> want, got;
        for (const auto& f : faces) want.insert(f.canon());
        for (const auto& f : emb.trace_faces()) got.insert(Square(f.cycle()).canon());
        if (want != got) return std::nullopt;
        return emb;
    } catch (const StructuralError&) {
        return std::nullopt;
    }
}

namespace {

// Per-vertex umbrella state with rollback: neighbor slots must chain into a
// single cycle; premature closure or slot overuse prunes the cover search.
struct UmbrellaState {
    // per vertex: map neighbor -> slot index
    std::vector<std::map<VertexId, int>> slot;
    std::vector<int> deg;          // graph degree per vertex
    std::vector<int> corner_count; // corners placed so far per vertex
    // flattened DSU over (vertex, slot)
    std::vector<int> parent, size, linkdeg;
    std::vector<int> offset;

    struct Undo {
        int v;
        int a, b;           // global slot ids
        int root_a, root_b; // roots before union (root_b==-1 if no union)
    };
    std::vector<Undo> undo;

    void init(const SimpleGraph& g) {
        int n = g.n;
        slot.assign(n + 1, {});
        deg.assign(n + 1, 0);
        corner_count.assign(n + 1, 0);
        offset.assign(n + 2, 0);
        for (const auto& e : g.edges) {
            slot[e.first][e.second] = deg[e.first]++;
            slot[e.second][e.first] = deg[e.second]++;
        }
        for (int v = 1; v <= n; ++v) offset[v + 1] = offset[v] + deg[v];
        int total = offset[n + 1];
        parent.resize(total);
        for (int i = 0; i < total; ++i) parent[i] = i;
        size.assign(total, 1);
        linkdeg.assign(total, 0);
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    // Add corner (a,v,b); returns false (without recording) if invalid.
    bool add(VertexId v, VertexId a, VertexId b) {
        int ga = offset[v] + slot[v].at(a);
        int gb = offset[v] + slot[v].at(b);
        if (linkdeg[ga] >= 2 || linkdeg[gb] >= 2) return false;
        int ra = find(ga), rb = find(gb);
        Undo u{v, ga, gb, ra, -1};
        if (ra == rb) {
            // closing a cycle: only valid if it closes the full umbrella
            if (corner_count[v] + 1 != deg[v]) return false;
            if (size[ra] != deg[v]) return false;
        } else {
            if (size[ra] < size[rb]) std::swap(ra, rb);
            parent[rb] = ra;
            size[ra] += size[rb];
            u.root_a = ra;
            u.root_b = rb;
        }
        linkdeg[ga]++;
        linkdeg[gb]++;
        corner_count[v]++;
        undo.push_back(u);
        return true;
    }
    void pop() {
        Undo u = undo.back();
        undo.pop_back();
        linkdeg[u.a]--;
        linkdeg[u.b]--;
        corner_count[u.v]--;
        if (u.root_b != -1) {
            parent[u.root_b] = u.root_b;
            size[u.root_a] -= size[u.root_b];
        }
    }
};

struct CoverSearch {
    const SearchProblem* prob;
    std::vector<Square> rows;
    std::vector<std::vector<int>> rows_with_edge;  // per edge index
    std::map<EdgeKey, int> edge_index;
    std::vector<int> capacity;
    std::vector<int> chosen;  // row indices, multiset
    UmbrellaState umbrella;
    SearchResult result;
    int target_faces = 0;

    bool place(int row) {
        const Square& f = rows[row];
        for (int i = 0; i < 4; ++i) {
            EdgeKey ek = edge_key(f.v[i], f.v[(i + 1) % 4]);
            if (capacity[edge_index.at(ek)] == 0) return false;
        }
        int added = 0;
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i) {
            VertexId prev = f.v[(i + 3) % 4], v = f.v[i], next = f.v[(i + 1) % 4];
            if (umbrella.add(v, prev, next))
                ++added;
            else
                ok = false;
        }
        if (!ok) {
            for (int i = 0; i < added; ++i) umbrella.pop();
            return false;
        }
        for (int i = 0; i < 4; ++i)
            capacity[edge_index.at(edge_key(f.v[i], f.v[(i + 1) % 4]))]--;
        chosen.push_back(row);
        return true;
    }
    void unplace() {
        int row = chosen.back();
        chosen.pop_back();
        const Square& f = rows[row];
        for (int i = 0; i < 4; ++i) {
            capacity[edge_index.at(edge_key(f.v[i], f.v[(i + 1) % 4]))]++;
            umbrella.pop();
        }
    }

    bool accept_cover() {
        result.covers_checked++;
        std::vector<Square> faces;
        for (int r : chosen) faces.push_back(rows[r]);
        auto emb = assemble(prob->graph, faces);
        if (!emb) return false;
        if (prob->orientable && emb->orientability() != *prob->orientable) return false;
        if (prob->target_chi && emb->euler_characteristic() != *prob->target_chi) return false;
        if (prob->face_simple && emb->is_face_simple() != *prob->face_simple) return false;
        for (const auto& pat : prob->required_faces) {
            bool found = false;
            for (const auto& f : faces)
                if (pattern_matches(pat, f)) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
        result.solutions.push_back(*emb);
        return static_cast<int>(result.solutions.size()) >= prob->max_solutions;
    }

    // returns true when enough solutions were found
    bool dfs() {
        if (++result.nodes > prob->node_cap)
            throw ResourceCapExceeded("oracle node cap exceeded");
        if (static_cast<int>(chosen.size()) == target_faces) return accept_cover();
        // most-constrained edge with remaining capacity
        int best_e = -1;
        size_t best_count = SIZE_MAX;
        for (size_t e = 0; e < capacity.size(); ++e) {
            if (capacity[e] == 0) continue;
            size_t cnt = 0;
            for (int r : rows_with_edge[e]) {
                // cheap availability test: all edges of r have capacity
                const Square& f = rows[r];
                bool ok = true;
                for (int i = 0; i < 4 && ok; ++i)
                    if (capacity[edge_index.at(edge_key(f.v[i], f.v[(i + 1) % 4]))] == 0)
                        ok = false;
                cnt += ok;
            }
            if (cnt < best_count) {
                best_count = cnt;
                best_e = static_cast<int>(e);
                if (cnt <= 1) break;
            }
        }
        if (best_e < 0) return false;  // capacity left but unreachable
        if (best_count == 0) return false;
        const auto& cand = rows_with_edge[best_e];
        if (capacity[best_e] == 2) {
            // choose the unordered pair of rows that will cover this edge
            for (size_t i = 0; i < cand.size(); ++i) {
                if (!place(cand[i])) continue;
                for (size_t j = i; j < cand.size(); ++j) {
                    if (!place(cand[j])) continue;
                    if (dfs()) return true;
                    unplace();
                }
                unplace();
            }
        } else {
            for (int r : cand) {
                if (!place(r)) continue;
                if (dfs()) return true;
                unplace();
            }
        }
        return false;
    }
};

}  // namespace

SearchResult search(const SearchProblem& problem) {
    CoverSearch cs;
    cs.prob = &problem;
    const auto& g = problem.graph;
    int m = static_cast<int>(g.edges.size());
    SearchResult empty;
    empty.complete = true;
    if ((2 * m) % 4 != 0) return empty;  // r = m/2 must be integral
    cs.target_faces = m / 2;
    cs.rows = enumerate_quadrilaterals(g);
    for (int i = 0; i < m; ++i) cs.edge_index[g.edges[i]] = i;
    cs.capacity.assign(m, 2);
    cs.rows_with_edge.assign(m, {});
    for (size_t r = 0; r < cs.rows.size(); ++r) {
        const Square& f = cs.rows[r];
        for (int i = 0; i < 4; ++i)
            cs.rows_with_edge[cs.edge_index.at(edge_key(f.v[i], f.v[(i + 1) % 4]))].push_back(
                static_cast<int>(r));
    }
    cs.umbrella.init(g);
    // quick infeasibility: every edge must lie on >= 2 quadrilaterals (with multiplicity)
    for (int e = 0; e < m; ++e)
        if (cs.rows_with_edge[e].empty()) return empty;
    // Pre-place fully named required faces (wildcard patterns stay as filters).
    for (const auto& pat : problem.required_faces) {
        if (std::count(pat.begin(), pat.end(), 0) > 0) continue;
        auto canon = Square(pat).canon();
        int row = -1;
        for (size_t r = 0; r < cs.rows.size(); ++r)
            if (cs.rows[r].canon() == canon) {
                row = static_cast<int>(r);
                break;
            }
        if (row < 0 || !cs.place(row)) return empty;  // infeasible as stated
    }
    cs.dfs();
    cs.result.complete = true;
    return cs.result;
}

bool exists_face_simple_sphere_quadrangulation(int n, uint64_t node_cap) {
    // Any simple n-vertex graph quadrangulating S_0 has m = 2n-4 and min degree >= 2.
    const int m_target = 2 * n - 4;
    std::vector<EdgeKey> all;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) all.push_back({u, v});
    const int total = static_cast<int>(all.size());
    std::vector<int> pick(m_target);
    for (int i = 0; i < m_target; ++i) pick[i] = i;
    auto advance = [&]() {
        int i = m_target - 1;
        while (i >= 0 && pick[i] == total - m_target + i) --i;
        if (i < 0) return false;
        ++pick[i];
        for (int j = i + 1; j < m_target; ++j) pick[j] = pick[j - 1] + 1;
        return true;
    };
    do {
        SimpleGraph g;
        g.n = n;
        for (int i : pick) g.edges.push_back(all[i]);
        bool degree_ok = true;
        for (int v = 1; v <= n && degree_ok; ++v)
            if (g.degree(v) < 2) degree_ok = false;
        if (!degree_ok) continue;
        SearchProblem p;
        p.graph = g;
        p.target_chi = 2;
        p.orientable = true;
        p.face_simple = true;
        p.node_cap = node_cap;
        p.max_solutions = 1;
        auto res = search(p);
        if (!res.solutions.empty()) return true;
    } while (advance());
    return false;
}

SearchProblem parse_problem(const std::string& text) {
    SearchProblem p;
    std::istringstream is(text);
    std::string line;
    bool have_graph = false;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "graph") {
            std::string kspec;
            ls >> kspec;
            if (kspec.empty() || (kspec[0] != 'K' && kspec[0] != 'k'))
                throw StructuralError("problem: expected K<n>");
            int n = std::stoi(kspec.substr(1));
            std::string rest, tok;
            ls >> rest;  // "minus" (optional)
            std::vector<EdgeKey> removed;
            if (rest == "minus") {
                std::string all;
                std::getline(ls, all);
                std::string cur;
                for (char c : all)
                    if (c != '{' && c != '}' && c != ' ') cur.push_back(c);
                std::stringstream es(cur);
                while (std::getline(es, tok, ',')) {
                    if (tok.empty()) continue;
                    auto second_v = tok.find('v', 1);
                    if (tok[0] != 'v' || second_v == std::string::npos)
                        throw StructuralError("problem: bad edge " + tok);
                    removed.push_back(edge_key(std::stoi(tok.substr(1, second_v - 1)),
                                               std::stoi(tok.substr(second_v + 1))));
                }
            }
            p.graph = SimpleGraph::complete(n).minus(removed);
            have_graph = true;
        } else if (word == "chi") {
            int c;
            ls >> c;
            p.target_chi = c;
        } else if (word == "orientable") {
            std::string v;
            ls >> v;
            if (v == "true") p.orientable = true;
            else if (v == "false") p.orientable = false;
            else if (v == "either") p.orientable.reset();
            else throw StructuralError("problem: bad orientable value");
        } else if (word == "face-simple") {
            std::string v;
            ls >> v;
            p.face_simple = (v == "true");
        } else if (word == "require-face") {
            FacePattern pat;
            std::string v;
            while (ls >> v) {
                if (v == "x" || v == "X") pat.push_back(0);
                else if (v[0] == 'v') pat.push_back(std::stoi(v.substr(1)));
                else pat.push_back(std::stoi(v));
            }
            if (pat.size() != 4) throw StructuralError("problem: patterns need 4 corners");
            p.required_faces.push_back(pat);
        } else if (word == "max-solutions") {
            ls >> p.max_solutions;
        } else if (word[0] == '#') {
            continue;
        } else {
            throw StructuralError("problem: unknown directive " + word);
        }
    }
    if (!have_graph) throw StructuralError("problem: missing graph line");
    return p;
}

}  // namespace quad
