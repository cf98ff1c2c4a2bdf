#include "quad/surgery.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace quad {

std::string handle_type_name(HandleType t) {
    switch (t) {
        case HandleType::I: return "I";
        case HandleType::II: return "II";
        case HandleType::III: return "III";
        case HandleType::IV: return "IV";
    }
    return "?";
}

namespace {

using Pair = std::pair<VertexId, VertexId>;

struct Link {
    VertexId a, b;  // unordered pair of neighbors of some vertex
};

Pair norm(VertexId a, VertexId b) { return a < b ? Pair{a, b} : Pair{b, a}; }

// Corner links contributed by a face cycle at each of its vertices.
void collect_links(const std::vector<VertexId>& cyc,
                   std::map<VertexId, std::vector<Pair>>& links) {
    const int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i) {
        VertexId prev = cyc[(i - 1 + k) % k];
        VertexId v = cyc[i];
        VertexId next = cyc[(i + 1) % k];
        links[v].push_back(norm(prev, next));
    }
}

bool erase_one(std::vector<Pair>& v, const Pair& p) {
    auto it = std::find(v.begin(), v.end(), p);
    if (it == v.end()) return false;
    v.erase(it);
    return true;
}

}  // namespace

Embedding apply_patch(const Embedding& e, const std::vector<Square>& destroyed,
                      const std::vector<std::vector<VertexId>>& created,
                      const std::vector<EdgeKey>& deleted_edges, int new_vertex_count) {
    const int n0 = e.order();
    const int n1 = n0 + new_vertex_count;

    // Locate destroyed faces as traced orbits.
    auto faces = e.trace_faces();
    std::vector<int> destroyed_idx;
    for (const auto& s : destroyed) {
        auto idx = find_face(faces, s);
        if (!idx) throw StructuralError("apply_patch: " + s.str() + " is not a face");
        if (std::find(destroyed_idx.begin(), destroyed_idx.end(), *idx) != destroyed_idx.end())
            throw StructuralError("apply_patch: duplicate destroyed face");
        destroyed_idx.push_back(*idx);
    }

    // Corner links to remove / add, per vertex.
    std::map<VertexId, std::vector<Pair>> removed, added;
    for (int idx : destroyed_idx) collect_links(faces[idx].cycle(), removed);
    for (const auto& cyc : created) collect_links(cyc, added);

    std::set<EdgeKey> deleted(deleted_edges.begin(), deleted_edges.end());

    // New edges: present in created cycles, absent from the embedding.
    std::set<EdgeKey> old_edges;
    for (const auto& ek : e.edges()) old_edges.insert(ek);
    std::set<EdgeKey> new_edges;
    for (const auto& cyc : created) {
        const int k = static_cast<int>(cyc.size());
        for (int i = 0; i < k; ++i) {
            VertexId a = cyc[i], b = cyc[(i + 1) % k];
            if (a == b) throw StructuralError("apply_patch: loop in created face");
            EdgeKey ek = edge_key(a, b);
            if (deleted.count(ek)) throw StructuralError("apply_patch: created face uses deleted edge");
            if (!old_edges.count(ek)) new_edges.insert(ek);
        }
    }

    // Affected vertices: anywhere a link changes or an incident edge vanishes.
    std::set<VertexId> affected;
    for (auto& [v, _] : removed) affected.insert(v);
    for (auto& [v, _] : added) affected.insert(v);
    for (const auto& ek : deleted) {
        affected.insert(ek.first);
        affected.insert(ek.second);
    }
    for (int v = n0 + 1; v <= n1; ++v) affected.insert(v);

    std::vector<std::vector<Arc>> rot = e.raw();
    rot.resize(n1);

    for (VertexId v : affected) {
        // Present cycle links (ordered), minus removed, plus added, re-chained.
        std::vector<Pair> keep;
        std::vector<std::pair<VertexId, VertexId>> keep_oriented;  // for direction
        if (v <= n0) {
            const auto& r = e.rotation(v);
            const int d = static_cast<int>(r.size());
            if (d < 2) throw StructuralError("apply_patch: vertex of degree < 2");
            std::vector<Pair> to_remove = removed.count(v) ? removed[v] : std::vector<Pair>{};
            // A degree-2 vertex carries two corner links with the same
            // unordered neighbor pair; keep both copies.
            for (int i = 0; i < d; ++i) {
                VertexId x = r[i].to, y = r[(i + 1) % d].to;
                Pair p = norm(x, y);
                if (erase_one(to_remove, p)) continue;
                keep.push_back(p);
                keep_oriented.push_back({x, y});
            }
            if (!to_remove.empty())
                throw StructuralError("apply_patch: destroyed corner not in rotation at v" +
                                      std::to_string(v));
        }
        std::vector<Pair> links = keep;
        if (added.count(v))
            for (const auto& p : added[v]) links.push_back(p);

        // Kept links must not mention deleted edges; collect final neighbor set.
        std::set<VertexId> nbrs;
        for (const auto& p : links) {
            for (VertexId u : {p.first, p.second}) {
                if (deleted.count(edge_key(v, u)))
                    throw StructuralError("apply_patch: retained link uses deleted edge");
                nbrs.insert(u);
            }
        }
        // Degree check: every neighbor appears in exactly two links.
        std::map<VertexId, int> deg;
        for (const auto& p : links) {
            deg[p.first]++;
            deg[p.second]++;
        }
        for (auto& [u, dcount] : deg)
            if (dcount != 2)
                throw StructuralError("apply_patch: umbrella degree != 2 at v" + std::to_string(v) +
                                      " neighbor v" + std::to_string(u));
        if (deg.size() != nbrs.size() || nbrs.empty())
            throw StructuralError("apply_patch: umbrella mismatch at v" + std::to_string(v));

        // Chain the links into a single cycle.
        std::map<VertexId, std::vector<VertexId>> adj;
        for (const auto& p : links) {
            adj[p.first].push_back(p.second);
            adj[p.second].push_back(p.first);
        }
        VertexId start, second;
        if (!keep_oriented.empty()) {
            start = keep_oriented.front().first;
            second = keep_oriented.front().second;
        } else {
            start = *nbrs.begin();
            second = std::min(adj[start][0], adj[start][1]);
        }
        std::vector<VertexId> order;
        order.push_back(start);
        VertexId prev = start, cur = second;
        while (cur != start) {
            order.push_back(cur);
            VertexId nxt = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
        }
        if (order.size() != nbrs.size())
            throw StructuralError("apply_patch: umbrella not a single cycle at v" +
                                  std::to_string(v));
        // Special case: two neighbors produce the same cyclic order either way.
        std::vector<Arc> nr;
        nr.reserve(order.size());
        for (VertexId u : order) nr.push_back({u, +1});  // signs fixed below
        rot[v - 1] = std::move(nr);
    }

    // Carry over old signs; remove deleted edges from untouched rotations too.
    std::map<EdgeKey, int> lambda;
    for (const auto& ek : old_edges)
        if (!deleted.count(ek)) lambda[ek] = e.sign(ek.first, ek.second);
    for (VertexId v = 1; v <= n1; ++v) {
        auto& r = rot[v - 1];
        if (!affected.count(v)) continue;
        for (auto& a : r) {
            EdgeKey ek = edge_key(v, a.to);
            if (lambda.count(ek)) a.sign = lambda[ek];
        }
    }

    // Solve created-face corner orientations against the new rotations, fixing
    // signs of new edges and checking old ones.
    auto pred_succ = [&](VertexId v, VertexId from) -> std::pair<VertexId, VertexId> {
        const auto& r = rot[v - 1];
        const int d = static_cast<int>(r.size());
        int p = -1;
        for (int i = 0; i < d; ++i)
            if (r[i].to == from) p = i;
        if (p < 0) throw StructuralError("apply_patch: orientation lookup failed");
        return {r[(p - 1 + d) % d].to, r[(p + 1) % d].to};
    };
    std::map<EdgeKey, int> new_lambda;
    for (const auto& cyc : created) {
        const int k = static_cast<int>(cyc.size());
        std::vector<int> ohat(k, 0);
        for (int i = 0; i < k; ++i) {
            VertexId a = cyc[(i - 1 + k) % k], v = cyc[i], b = cyc[(i + 1) % k];
            auto [pr, su] = pred_succ(v, a);
            if (b == pr)
                ohat[i] = +1;
            else if (b == su)
                ohat[i] = -1;
            else
                throw StructuralError("apply_patch: created corner not chained at v" +
                                      std::to_string(v));
        }
        for (int i = 0; i < k; ++i) {
            VertexId x = cyc[i], y = cyc[(i + 1) % k];
            int req = ohat[i] * ohat[(i + 1) % k];
            EdgeKey ek = edge_key(x, y);
            if (lambda.count(ek)) {
                if (lambda[ek] != req)
                    throw StructuralError("apply_patch: sign conflict on old edge");
            } else {
                auto it = new_lambda.find(ek);
                if (it == new_lambda.end())
                    new_lambda[ek] = req;
                else if (it->second != req)
                    throw StructuralError("apply_patch: sign conflict on new edge");
            }
        }
    }
    for (VertexId v : affected) {
        for (auto& a : rot[v - 1]) {
            EdgeKey ek = edge_key(v, a.to);
            auto it = new_lambda.find(ek);
            if (it != new_lambda.end()) a.sign = it->second;
        }
    }

    Embedding out(rot);

    // Postconditions: the face set changes by exactly destroyed -> created;
    // every untouched face persists verbatim.
    auto canon_multiset = [](const std::vector<FaceWalk>& fs, const std::set<int>& skip) {
        std::multiset<std::vector<VertexId>> ms;
        for (size_t i = 0; i < fs.size(); ++i)
            if (!skip.count(static_cast<int>(i))) ms.insert(Square(fs[i].cycle()).canon());
        return ms;
    };
    std::set<int> skip_old(destroyed_idx.begin(), destroyed_idx.end());
    auto before = canon_multiset(faces, skip_old);

    auto nf = out.trace_faces();
    std::vector<int> created_idx;
    {
        std::set<int> used;
        for (const auto& cyc : created) {
            auto want = Square(cyc).canon();
            bool found = false;
            for (size_t i = 0; i < nf.size(); ++i) {
                if (used.count(static_cast<int>(i))) continue;
                if (nf[i].length() == static_cast<int>(want.size()) &&
                    Square(nf[i].cycle()).canon() == want) {
                    used.insert(static_cast<int>(i));
                    created_idx.push_back(static_cast<int>(i));
                    found = true;
                    break;
                }
            }
            if (!found) throw StructuralError("apply_patch: created face missing after rewrite");
        }
        auto after = canon_multiset(nf, used);
        if (before != after)
            throw StructuralError("apply_patch: untouched faces were altered");
    }
    return out;
}

Embedding disc_addition(const Embedding& e, const Square& f, VertexId vi, VertexId vj,
                        SurgeryStep* step) {
    if (f.v.size() != 4) throw StructuralError("disc_addition: face must be a square");
    if (vi != e.order() + 1 || vj != e.order() + 2)
        throw StructuralError("disc_addition: new ids must be the next two vertex ids");
    auto faces = e.trace_faces();
    if (!find_face(faces, f)) throw StructuralError("disc_addition: not a face: " + f.str());
    VertexId s0 = f.v[0], s1 = f.v[1], s2 = f.v[2], s3 = f.v[3];
    std::vector<std::vector<VertexId>> created = {
        {s0, s1, s2, vi}, {s0, vi, s2, vj}, {s0, vj, s2, s3}};
    Embedding out = apply_patch(e, {f}, created, {}, 2);

    assert(out.order() == e.order() + 2);
    assert(out.edge_count() == e.edge_count() + 4);
    assert(out.euler_characteristic() == e.euler_characteristic());
    if (step) {
        step->kind = SurgeryKind::Disc;
        step->outer = f;
        step->new_vertices = {vi, vj};
        step->destroyed_faces = {f};
        step->created_faces.clear();
        for (auto& c : created) step->created_faces.emplace_back(c);
    }
    return out;
}

std::vector<EdgeKey> handle_new_edges(HandleType type, const Square& o, const Square& i) {
    VertexId v1 = o.v[0], v2 = o.v[1], v3 = o.v[2], v4 = o.v[3];
    VertexId u1 = i.v[0], u2 = i.v[1], u3 = i.v[2], u4 = i.v[3];
    switch (type) {
        case HandleType::I:
        case HandleType::III:
            return {edge_key(v1, u2), edge_key(v3, u2), edge_key(v3, u4), edge_key(v1, u4)};
        case HandleType::II:
            return {edge_key(v1, u4), edge_key(v3, u4), edge_key(v4, u3), edge_key(v4, u1)};
        case HandleType::IV:
            return {edge_key(v1, u1), edge_key(v2, u4), edge_key(v3, u3), edge_key(v4, u2)};
    }
    throw StructuralError("bad handle type");
}

std::vector<Square> handle_created_faces(HandleType type, const Square& o, const Square& i) {
    VertexId v1 = o.v[0], v2 = o.v[1], v3 = o.v[2], v4 = o.v[3];
    VertexId u1 = i.v[0], u2 = i.v[1], u3 = i.v[2], u4 = i.v[3];
    switch (type) {
        case HandleType::I:
            return {Square(v1, v2, v3, u2), Square(v3, v4, v1, u4), Square(v3, u2, u3, u4),
                    Square(v1, u4, u1, u2)};
        case HandleType::II:
            return {Square(v1, v2, v3, u4), Square(v3, v4, u3, u4), Square(v4, u1, u2, u3),
                    Square(v4, v1, u4, u1)};
        case HandleType::III:
            return {Square(v1, v2, v3, u2), Square(v3, v4, v1, u4), Square(v1, u2, u3, u4),
                    Square(v3, u4, u1, u2)};
        case HandleType::IV:
            return {Square(v1, v2, u4, u1), Square(v2, v3, u3, u4), Square(v3, v4, u2, u3),
                    Square(v4, v1, u1, u2)};
    }
    throw StructuralError("bad handle type");
}

Embedding handle_addition(const Embedding& e, HandleType type, const Square& outer,
                          const Square& inner, SurgeryStep* step) {
    if (outer.v.size() != 4 || inner.v.size() != 4)
        throw StructuralError("handle_addition: squares required");
    auto faces = e.trace_faces();
    auto oi = find_face(faces, outer);
    auto ii = find_face(faces, inner);
    if (!oi) throw StructuralError("handle_addition: outer is not a face: " + outer.str());
    if (!ii) throw StructuralError("handle_addition: inner is not a face: " + inner.str());
    if (*oi == *ii) throw StructuralError("handle_addition: outer and inner must be distinct");
    auto new_edges = handle_new_edges(type, outer, inner);
    {
        std::set<EdgeKey> uniq;
        for (const auto& ek : new_edges) {
            if (ek.first == ek.second)
                throw StructuralError("handle_addition: degenerate edge");
            if (e.adjacent(ek.first, ek.second))
                throw StructuralError("handle_addition: edge already present v" +
                                      std::to_string(ek.first) + "v" + std::to_string(ek.second));
            if (!uniq.insert(ek).second)
                throw StructuralError("handle_addition: duplicate new edge");
        }
    }
    auto created_sq = handle_created_faces(type, outer, inner);
    std::vector<std::vector<VertexId>> created;
    for (auto& s : created_sq) created.push_back(s.v);
    Embedding out = apply_patch(e, {outer, inner}, created, {}, 0);

    assert(out.order() == e.order());
    assert(out.edge_count() == e.edge_count() + 4);
    assert(out.euler_characteristic() == e.euler_characteristic() - 2);
    if (step) {
        step->kind = SurgeryKind::Handle;
        step->handle = type;
        step->outer = outer;
        step->inner = inner;
        step->destroyed_faces = {outer, inner};
        step->created_faces = created_sq;
    }
    return out;
}

Embedding crosscap_addition(const Embedding& e, const Square& f, SurgeryStep* step) {
    if (f.v.size() != 4) throw StructuralError("crosscap_addition: square required");
    auto faces = e.trace_faces();
    if (!find_face(faces, f)) throw StructuralError("crosscap_addition: not a face: " + f.str());
    VertexId v1 = f.v[0], v2 = f.v[1], v3 = f.v[2], v4 = f.v[3];
    if (e.adjacent(v1, v3) || e.adjacent(v2, v4))
        throw StructuralError("crosscap_addition: diagonal already an edge");
    std::vector<std::vector<VertexId>> created = {{v1, v2, v4, v3}, {v1, v4, v2, v3}};
    Embedding out = apply_patch(e, {f}, created, {}, 0);

    assert(out.edge_count() == e.edge_count() + 2);
    assert(out.euler_characteristic() == e.euler_characteristic() - 1);
    assert(!out.orientability());
    if (step) {
        step->kind = SurgeryKind::Crosscap;
        step->outer = f;
        step->destroyed_faces = {f};
        step->created_faces = {Square(v1, v2, v4, v3), Square(v1, v4, v2, v3)};
    }
    return out;
}

Embedding crosscap_removal(const Embedding& e, EdgeKey e1, EdgeKey e2, SurgeryStep* step) {
    e1 = edge_key(e1.first, e1.second);
    e2 = edge_key(e2.first, e2.second);
    if (!e.adjacent(e1.first, e1.second) || !e.adjacent(e2.first, e2.second))
        throw StructuralError("crosscap_removal: edge not present");
    auto faces = e.trace_faces();
    auto faces_with = [&](EdgeKey ek) {
        std::vector<int> out;
        for (size_t i = 0; i < faces.size(); ++i)
            for (const auto& c : faces[i].corners)
                if (edge_key(c.from, c.to) == ek) {
                    out.push_back(static_cast<int>(i));
                    break;
                }
        return out;
    };
    auto f1s = faces_with(e1), f2s = faces_with(e2);
    std::sort(f1s.begin(), f1s.end());
    std::sort(f2s.begin(), f2s.end());
    if (f1s.size() != 2 || f1s != f2s || f1s[0] == f1s[1])
        throw StructuralError("crosscap_removal: edges do not span a crosscap configuration");

    // Boundary edges of the union minus the two deleted chords must form a 4-cycle.
    std::map<EdgeKey, int> count;
    for (int idx : {f1s[0], f1s[1]})
        for (const auto& c : faces[idx].corners) count[edge_key(c.from, c.to)]++;
    if (count[e1] != 2 || count[e2] != 2)
        throw StructuralError("crosscap_removal: chords not interior to the configuration");
    std::map<VertexId, std::vector<VertexId>> ring;
    for (auto& [ek, cnt] : count) {
        if (ek == e1 || ek == e2) continue;
        if (cnt != 1) throw StructuralError("crosscap_removal: boundary not simple");
        ring[ek.first].push_back(ek.second);
        ring[ek.second].push_back(ek.first);
    }
    if (ring.size() != 4) throw StructuralError("crosscap_removal: boundary is not a 4-cycle");
    for (auto& [v, ns] : ring)
        if (ns.size() != 2) throw StructuralError("crosscap_removal: boundary is not a 4-cycle");
    std::vector<VertexId> cyc;
    VertexId start = ring.begin()->first;
    cyc.push_back(start);
    VertexId prev = start, cur = ring[start][0];
    while (cur != start) {
        cyc.push_back(cur);
        VertexId nxt = (ring[cur][0] == prev) ? ring[cur][1] : ring[cur][0];
        prev = cur;
        cur = nxt;
    }
    if (cyc.size() != 4) throw StructuralError("crosscap_removal: boundary is not a 4-cycle");
    // The deleted chords must be the diagonals of that cycle.
    Square target(cyc);
    if (!target.has_diagonal(e1.first, e1.second) || !target.has_diagonal(e2.first, e2.second))
        throw StructuralError("crosscap_removal: chords are not the diagonals");

    Square fa(faces[f1s[0]].cycle()), fb(faces[f1s[1]].cycle());
    Embedding out = apply_patch(e, {fa, fb}, {cyc}, {e1, e2}, 0);

    assert(out.edge_count() == e.edge_count() - 2);
    assert(out.euler_characteristic() == e.euler_characteristic() + 1);
    if (step) {
        step->kind = SurgeryKind::CrosscapRemoval;
        step->removed_edges = {e1, e2};
        step->destroyed_faces = {fa, fb};
        step->created_faces = {target};
        step->outer = target;
    }
    return out;
}

namespace {
std::string sq_csv(const Square& s) {
    std::ostringstream os;
    for (size_t i = 0; i < s.v.size(); ++i) os << (i ? "," : "") << "v" << s.v[i];
    return os.str();
}

std::optional<Square> parse_sq_csv(const std::string& text) {
    std::vector<VertexId> vs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item[0] != 'v') return std::nullopt;
        vs.push_back(std::stoi(item.substr(1)));
    }
    if (vs.size() != 4) return std::nullopt;
    return Square(vs);
}
}  // namespace

std::string SurgeryStep::log_line() const {
    std::ostringstream os;
    switch (kind) {
        case SurgeryKind::Disc:
            os << "disc outer=" << sq_csv(outer) << " diag=v" << outer.v[0] << ",v" << outer.v[2]
               << " new=v" << new_vertices.first << ",v" << new_vertices.second;
            break;
        case SurgeryKind::Handle:
            os << "handle type=" << handle_type_name(handle) << " outer=" << sq_csv(outer)
               << " inner=" << sq_csv(inner);
            break;
        case SurgeryKind::Crosscap:
            os << "crosscap face=" << sq_csv(outer);
            break;
        case SurgeryKind::CrosscapRemoval:
            os << "crosscap-removal edges=v" << removed_edges.first.first << ",v"
               << removed_edges.first.second << ";v" << removed_edges.second.first << ",v"
               << removed_edges.second.second;
            break;
    }
    return os.str();
}

std::optional<SurgeryStep> parse_log_line(const std::string& line) {
    std::istringstream is(line);
    std::string word;
    if (!(is >> word)) return std::nullopt;
    std::map<std::string, std::string> kv;
    std::string tok;
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) return std::nullopt;
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    SurgeryStep st;
    if (word == "disc") {
        st.kind = SurgeryKind::Disc;
        auto sq = parse_sq_csv(kv["outer"]);
        if (!sq) return std::nullopt;
        st.outer = *sq;
        std::stringstream nv(kv["new"]);
        std::string a, b;
        std::getline(nv, a, ',');
        std::getline(nv, b, ',');
        if (a.empty() || b.empty() || a[0] != 'v' || b[0] != 'v') return std::nullopt;
        st.new_vertices = {std::stoi(a.substr(1)), std::stoi(b.substr(1))};
        return st;
    }
    if (word == "handle") {
        st.kind = SurgeryKind::Handle;
        const std::string& t = kv["type"];
        if (t == "I") st.handle = HandleType::I;
        else if (t == "II") st.handle = HandleType::II;
        else if (t == "III") st.handle = HandleType::III;
        else if (t == "IV") st.handle = HandleType::IV;
        else return std::nullopt;
        auto so = parse_sq_csv(kv["outer"]);
        auto si = parse_sq_csv(kv["inner"]);
        if (!so || !si) return std::nullopt;
        st.outer = *so;
        st.inner = *si;
        return st;
    }
    if (word == "crosscap") {
        st.kind = SurgeryKind::Crosscap;
        auto sq = parse_sq_csv(kv["face"]);
        if (!sq) return std::nullopt;
        st.outer = *sq;
        return st;
    }
    if (word == "crosscap-removal") {
        st.kind = SurgeryKind::CrosscapRemoval;
        std::stringstream ev(kv["edges"]);
        std::string p1, p2;
        std::getline(ev, p1, ';');
        std::getline(ev, p2, ';');
        auto parse_pair = [](const std::string& s) -> std::optional<EdgeKey> {
            auto comma = s.find(',');
            if (comma == std::string::npos || s[0] != 'v' || s[comma + 1] != 'v')
                return std::nullopt;
            return edge_key(std::stoi(s.substr(1, comma - 1)), std::stoi(s.substr(comma + 2)));
        };
        auto a = parse_pair(p1), b = parse_pair(p2);
        if (!a || !b) return std::nullopt;
        st.removed_edges = {*a, *b};
        return st;
    }
    return std::nullopt;
}

Embedding replay_step(const Embedding& e, const SurgeryStep& step) {
    switch (step.kind) {
        case SurgeryKind::Disc:
            return disc_addition(e, step.outer, step.new_vertices.first,
                                 step.new_vertices.second);
        case SurgeryKind::Handle:
            return handle_addition(e, step.handle, step.outer, step.inner);
        case SurgeryKind::Crosscap:
            return crosscap_addition(e, step.outer);
        case SurgeryKind::CrosscapRemoval:
            return crosscap_removal(e, step.removed_edges.first, step.removed_edges.second);
    }
    throw StructuralError("replay_step: bad step");
}

}  // namespace quad
