#include "quad/core.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

namespace quad {

std::vector<VertexId> FaceWalk::cycle() const {
    std::vector<VertexId> out;
    out.reserve(corners.size());
    for (const auto& c : corners) out.push_back(c.from);
    return out;
}

bool FaceWalk::is_square() const {
    if (corners.size() != 4) return false;
    auto cyc = cycle();
    std::sort(cyc.begin(), cyc.end());
    return std::adjacent_find(cyc.begin(), cyc.end()) == cyc.end();
}

std::vector<VertexId> Square::canon() const {
    const int k = static_cast<int>(v.size());
    std::vector<VertexId> best;
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<VertexId> seq = v;
        if (dir == 1) std::reverse(seq.begin(), seq.end());
        for (int s = 0; s < k; ++s) {
            std::vector<VertexId> cand(k);
            for (int i = 0; i < k; ++i) cand[i] = seq[(s + i) % k];
            if (best.empty() || cand < best) best = cand;
        }
    }
    return best;
}

bool Square::has_diagonal(VertexId a, VertexId b) const {
    if (v.size() != 4) return false;
    return (edge_key(v[0], v[2]) == edge_key(a, b)) || (edge_key(v[1], v[3]) == edge_key(a, b));
}

std::string Square::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << "v" << v[i];
    return os.str();
}

std::string SurfaceSpec::name() const {
    return (orientable ? "S" : "N") + std::to_string(genus);
}

std::optional<SurfaceSpec> SurfaceSpec::from_chi(int chi, bool orientable) {
    if (chi > 2) return std::nullopt;
    if (orientable) {
        if ((2 - chi) % 2 != 0) return std::nullopt;
        return SurfaceSpec::S((2 - chi) / 2);
    }
    if (chi > 1) return std::nullopt;
    return SurfaceSpec::N(2 - chi);
}

std::optional<SurfaceSpec> SurfaceSpec::parse(const std::string& text) {
    if (text.size() < 2) return std::nullopt;
    char c = text[0];
    if (c != 'S' && c != 's' && c != 'N' && c != 'n') return std::nullopt;
    for (size_t i = 1; i < text.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
    int g = std::stoi(text.substr(1));
    if ((c == 'N' || c == 'n') && g < 1) return std::nullopt;
    return (c == 'S' || c == 's') ? SurfaceSpec::S(g) : SurfaceSpec::N(g);
}

Embedding::Embedding(std::vector<std::vector<Arc>> rotations) : rot_(std::move(rotations)) {
    validate();
}

const std::vector<Arc>& Embedding::at(VertexId v) const {
    if (v < 1 || v > order()) throw StructuralError("vertex id out of range: " + std::to_string(v));
    return rot_[v - 1];
}

int Embedding::edge_count() const {
    int total = 0;
    for (const auto& r : rot_) total += static_cast<int>(r.size());
    return total / 2;
}

bool Embedding::adjacent(VertexId u, VertexId v) const {
    for (const auto& a : at(u))
        if (a.to == v) return true;
    return false;
}

int Embedding::sign(VertexId u, VertexId v) const {
    for (const auto& a : at(u))
        if (a.to == v) return a.sign;
    throw StructuralError("no edge " + std::to_string(u) + "-" + std::to_string(v));
}

std::vector<EdgeKey> Embedding::edges() const {
    std::vector<EdgeKey> out;
    for (int v = 1; v <= order(); ++v)
        for (const auto& a : at(v))
            if (v < a.to) out.push_back({v, a.to});
    std::sort(out.begin(), out.end());
    return out;
}

bool Embedding::connected() const {
    if (order() == 0) return false;
    std::vector<char> seen(order() + 1, 0);
    std::queue<int> q;
    q.push(1);
    seen[1] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const auto& a : at(v))
            if (!seen[a.to]) {
                seen[a.to] = 1;
                ++cnt;
                q.push(a.to);
            }
    }
    return cnt == order();
}

void Embedding::validate() const {
    const int n = order();
    if (n < 3) throw StructuralError("embeddings need at least 3 vertices");
    for (int v = 1; v <= n; ++v) {
        std::set<int> seen;
        for (const auto& a : rot_[v - 1]) {
            if (a.to < 1 || a.to > n) throw StructuralError("neighbor out of range");
            if (a.to == v) throw StructuralError("loop at v" + std::to_string(v));
            if (!seen.insert(a.to).second)
                throw StructuralError("parallel edge at v" + std::to_string(v));
            if (a.sign != 1 && a.sign != -1) throw StructuralError("bad sign");
        }
    }
    for (int v = 1; v <= n; ++v)
        for (const auto& a : rot_[v - 1]) {
            bool found = false;
            for (const auto& b : rot_[a.to - 1])
                if (b.to == v) {
                    found = true;
                    if (b.sign != a.sign)
                        throw StructuralError("sign mismatch on edge " + std::to_string(v) + "-" +
                                              std::to_string(a.to));
                }
            if (!found) throw StructuralError("asymmetric adjacency");
        }
    if (!connected()) throw StructuralError("graph not connected");
}

// Face tracing over states (dart, orient). Arriving at v from u with local
// orientation o, the walk leaves toward the rotation predecessor of u when
// o=+1 and the successor when o=-1; crossing a negative edge flips o. With
// rotations read as clockwise this emits faces in clockwise order.
std::vector<FaceWalk> Embedding::trace_faces() const {
    const int n = order();
    // dart ids: per vertex, per rotation slot
    std::vector<int> base(n + 1, 0);
    int darts = 0;
    for (int v = 1; v <= n; ++v) {
        base[v] = darts;
        darts += degree(v);
    }
    // position lookup
    std::map<EdgeKey, std::pair<int, int>> pos;  // (u,v)->(slot of v in rot(u), slot of u in rot(v))
    std::vector<std::vector<int>> slot_of(n + 1);
    for (int v = 1; v <= n; ++v) {
        slot_of[v].assign(n + 1, -1);
        const auto& r = rot_[v - 1];
        for (int i = 0; i < static_cast<int>(r.size()); ++i) slot_of[v][r[i].to] = i;
    }
    auto dart_id = [&](int u, int v) { return base[u] + slot_of[u][v]; };
    auto state_id = [&](int u, int v, int o) { return 2 * dart_id(u, v) + (o < 0 ? 1 : 0); };

    std::vector<char> visited(2 * darts, 0);
    std::vector<FaceWalk> out;
    for (int u = 1; u <= n; ++u) {
        const auto& ru = rot_[u - 1];
        for (int i = 0; i < static_cast<int>(ru.size()); ++i) {
            for (int o0 : {+1, -1}) {
                int s0 = state_id(u, ru[i].to, o0);
                if (visited[s0]) continue;
                FaceWalk walk;
                int cu = u, cv = ru[i].to, o = o0;
                do {
                    visited[state_id(cu, cv, o)] = 1;
                    // mark the reverse traversal's state as visited too
                    int orev = -o * sign(cu, cv);
                    visited[state_id(cv, cu, orev)] = 1;
                    walk.corners.push_back({cu, cv, o});
                    int o2 = o * sign(cu, cv);
                    const auto& rv = rot_[cv - 1];
                    int p = slot_of[cv][cu];
                    int d = static_cast<int>(rv.size());
                    int w = (o2 > 0) ? rv[(p - 1 + d) % d].to : rv[(p + 1) % d].to;
                    cu = cv;
                    cv = w;
                    o = o2;
                } while (!(cu == u && cv == ru[i].to && o == o0));
                out.push_back(std::move(walk));
            }
        }
    }
    return out;
}

int Embedding::euler_characteristic() const {
    return order() - edge_count() + static_cast<int>(trace_faces().size());
}

bool Embedding::orientability() const {
    // Orientable iff every cycle has positive sign product (signs balanced).
    const int n = order();
    std::vector<int> color(n + 1, 0);
    std::queue<int> q;
    color[1] = 1;
    q.push(1);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const auto& a : rot_[v - 1]) {
            int want = color[v] * a.sign;
            if (color[a.to] == 0) {
                color[a.to] = want;
                q.push(a.to);
            } else if (color[a.to] != want) {
                return false;
            }
        }
    }
    return true;
}

SurfaceSpec Embedding::surface_of() const {
    int chi = euler_characteristic();
    bool ori = orientability();
    auto s = SurfaceSpec::from_chi(chi, ori);
    if (!s) throw StructuralError("inconsistent chi/orientability: chi=" + std::to_string(chi));
    return *s;
}

bool Embedding::is_quadrangular() const {
    for (const auto& f : trace_faces())
        if (!f.is_square()) return false;
    return true;
}

bool Embedding::is_face_simple() const {
    auto faces = trace_faces();
    std::vector<std::set<EdgeKey>> fe;
    fe.reserve(faces.size());
    for (const auto& f : faces) {
        std::set<EdgeKey> s;
        for (const auto& c : f.corners) s.insert(edge_key(c.from, c.to));
        fe.push_back(std::move(s));
    }
    for (size_t i = 0; i < fe.size(); ++i)
        for (size_t j = i + 1; j < fe.size(); ++j) {
            int shared = 0;
            for (const auto& e : fe[i]) shared += fe[j].count(e);
            if (shared >= 2) return false;
        }
    return true;
}

int Embedding::face_touch_multiplicity() const {
    auto faces = trace_faces();
    std::vector<std::set<EdgeKey>> fe(faces.size());
    std::vector<std::set<VertexId>> fv(faces.size());
    for (size_t i = 0; i < faces.size(); ++i)
        for (const auto& c : faces[i].corners) {
            fe[i].insert(edge_key(c.from, c.to));
            fv[i].insert(c.from);
        }
    int best = 0;
    for (size_t i = 0; i < faces.size(); ++i)
        for (size_t j = i + 1; j < faces.size(); ++j) {
            int edges_shared = 0;
            std::set<VertexId> on_shared_edge;
            for (const auto& e : fe[i])
                if (fe[j].count(e)) {
                    ++edges_shared;
                    on_shared_edge.insert(e.first);
                    on_shared_edge.insert(e.second);
                }
            int vtx = 0;
            for (VertexId v : fv[i])
                if (fv[j].count(v) && !on_shared_edge.count(v)) ++vtx;
            best = std::max(best, edges_shared + vtx);
        }
    return best;
}

void Embedding::flip(VertexId v) {
    auto& r = rot_[v - 1];
    std::reverse(r.begin(), r.end());
    for (auto& a : r) {
        a.sign = -a.sign;
        for (auto& b : rot_[a.to - 1])
            if (b.to == v) b.sign = -b.sign;
    }
}

Embedding Embedding::normalized() const {
    if (!orientability()) throw StructuralError("cannot normalize a nonorientable embedding");
    Embedding e = *this;
    const int n = order();
    std::vector<int> color(n + 1, 0);
    std::queue<int> q;
    color[1] = 1;
    q.push(1);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const auto& a : e.rot_[v - 1])
            if (color[a.to] == 0) {
                color[a.to] = color[v] * a.sign;
                q.push(a.to);
            }
    }
    for (int v = 1; v <= n; ++v)
        if (color[v] == -1) e.flip(v);
    return e;
}

std::vector<std::pair<int, int>> Embedding::dual_edges() const {
    auto faces = trace_faces();
    std::map<EdgeKey, std::vector<int>> sides;
    for (size_t i = 0; i < faces.size(); ++i)
        for (const auto& c : faces[i].corners)
            sides[edge_key(c.from, c.to)].push_back(static_cast<int>(i));
    std::vector<std::pair<int, int>> out;
    for (auto& [e, fs] : sides) {
        if (fs.size() != 2) throw StructuralError("edge-side conservation violated");
        out.push_back({fs[0], fs[1]});
    }
    return out;
}

int Embedding::position_of(VertexId v, VertexId u) const {
    const auto& r = at(v);
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i].to == u) return i;
    throw StructuralError("position_of: not adjacent");
}

bool Certificate::ok() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string Certificate::summary_line() const {
    std::ostringstream os;
    os << "n=" << n << " t=" << t << " m=" << m << " r=" << face_count << " chi=" << chi
       << " surface=" << surface.name() << " orientable=" << (surface.orientable ? 1 : 0)
       << " face_simple=" << (face_simple ? 1 : 0) << " missing=";
    bool first = true;
    for (const auto& e : missing_edges) {
        os << (first ? "" : ";") << "v" << e.first << "v" << e.second;
        first = false;
    }
    if (missing_edges.empty()) os << "-";
    os << " status=" << (ok() ? "PASS" : "FAIL");
    return os.str();
}

std::string Certificate::report() const {
    std::ostringstream os;
    os << "certificate " << summary_line() << "\n";
    for (const auto& c : checks)
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name
           << (c.detail.empty() ? "" : (": " + c.detail)) << "\n";
    return os.str();
}

Certificate certify(const Embedding& emb, const Claim& claim) {
    Certificate cert;
    auto check = [&](const std::string& name, bool pass, const std::string& detail = "") {
        cert.checks.push_back({name, pass, detail});
    };

    try {
        emb.validate();
        check("structure", true);
    } catch (const std::exception& ex) {
        check("structure", false, ex.what());
        return cert;
    }

    cert.n = emb.order();
    cert.m = emb.edge_count();
    auto faces = emb.trace_faces();
    cert.face_count = static_cast<int>(faces.size());
    cert.chi = cert.n - cert.m + cert.face_count;

    // edge-side conservation
    long sides = 0;
    for (const auto& f : faces) sides += f.length();
    check("edge_side_conservation", sides == 2L * cert.m);

    cert.quadrangular = emb.is_quadrangular();
    check("quadrangular", cert.quadrangular);
    if (cert.quadrangular)
        check("quad_arithmetic", 2 * cert.m == 4 * cert.face_count &&
                                     cert.chi == cert.n - cert.m / 2);

    bool ori = emb.orientability();
    auto sspec = SurfaceSpec::from_chi(cert.chi, ori);
    if (!sspec) {
        check("surface_consistent", false, "chi/orientability mismatch");
        return cert;
    }
    cert.surface = *sspec;
    check("surface_consistent", true);
    cert.face_simple = emb.is_face_simple();

    // missing edges relative to K_n
    std::set<EdgeKey> present;
    for (const auto& e : emb.edges()) present.insert(e);
    for (int u = 1; u <= cert.n; ++u)
        for (int v = u + 1; v <= cert.n; ++v)
            if (!present.count({u, v})) cert.missing_edges.insert({u, v});
    cert.t = static_cast<int>(cert.missing_edges.size());

    check("claim_n", cert.n == claim.n,
          "claimed n=" + std::to_string(claim.n) + " actual n=" + std::to_string(cert.n));
    check("claim_t", cert.t == claim.t,
          "claimed t=" + std::to_string(claim.t) + " actual t=" + std::to_string(cert.t));
    check("claim_edge_count", cert.m == cert.n * (cert.n - 1) / 2 - claim.t);
    check("claim_surface", cert.surface == claim.surface,
          "claimed " + claim.surface.name() + " actual " + cert.surface.name());
    if (claim.missing_edges)
        check("claim_missing_edges", cert.missing_edges == *claim.missing_edges);
    return cert;
}

std::vector<Square> face_squares(const Embedding& emb) {
    std::vector<Square> out;
    for (const auto& f : emb.trace_faces()) {
        if (f.length() != 4) throw StructuralError("face_squares on non-quadrangulation");
        out.emplace_back(f.cycle());
    }
    return out;
}

std::optional<int> find_face(const std::vector<FaceWalk>& faces, const Square& s) {
    auto want = s.canon();
    for (size_t i = 0; i < faces.size(); ++i) {
        if (faces[i].length() != static_cast<int>(want.size())) continue;
        if (Square(faces[i].cycle()).canon() == want) return static_cast<int>(i);
    }
    return std::nullopt;
}

}  // namespace quad
