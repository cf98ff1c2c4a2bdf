#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quad {

// Vertices are 1-based and contiguous within an embedding.
using VertexId = int;
using EdgeKey = std::pair<VertexId, VertexId>;

inline EdgeKey edge_key(VertexId u, VertexId v) {
    return u < v ? EdgeKey{u, v} : EdgeKey{v, u};
}

struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One entry of a vertex rotation: neighbor plus the sign of that edge.
struct Arc {
    VertexId to = 0;
    int sign = +1;
    bool operator==(const Arc&) const = default;
};

// One traversal step of a face walk. `orient` is the local orientation
// carried while leaving `from` (+1 keeps the rotation sense, -1 reverses it).
struct Corner {
    VertexId from = 0;
    VertexId to = 0;
    int orient = +1;
};

struct FaceWalk {
    std::vector<Corner> corners;
    int length() const { return static_cast<int>(corners.size()); }
    std::vector<VertexId> cycle() const;  // vertex sequence, one per corner
    bool is_square() const;               // length 4, vertices distinct
};

// Cyclic vertex sequence identifying a face up to rotation and reflection.
struct Square {
    std::vector<VertexId> v;  // boundary listing, |v| == 4 in this project
    Square() = default;
    explicit Square(std::vector<VertexId> vs) : v(std::move(vs)) {}
    Square(VertexId a, VertexId b, VertexId c, VertexId d) : v{a, b, c, d} {}
    std::vector<VertexId> canon() const;  // lexicographically minimal rotation/reflection
    bool same_face(const Square& o) const { return canon() == o.canon(); }
    bool has_diagonal(VertexId a, VertexId b) const;
    std::string str() const;
};

struct SurfaceSpec {
    bool orientable = true;
    int genus = 0;  // g for S_g, q for N_q
    int euler_characteristic() const { return orientable ? 2 - 2 * genus : 2 - genus; }
    int euler_genus() const { return 2 - euler_characteristic(); }
    std::string name() const;
    static SurfaceSpec S(int g) { return SurfaceSpec{true, g}; }
    static SurfaceSpec N(int q) { return SurfaceSpec{false, q}; }
    static std::optional<SurfaceSpec> from_chi(int chi, bool orientable);
    static std::optional<SurfaceSpec> parse(const std::string& text);
    bool operator==(const SurfaceSpec&) const = default;
};

// Signed rotation system for a connected simple graph. The single source of
// truth for an embedding; faces are always recomputed, never stored.
class Embedding {
public:
    Embedding() = default;
    explicit Embedding(std::vector<std::vector<Arc>> rotations);

    int order() const { return static_cast<int>(rot_.size()); }
    int edge_count() const;
    int degree(VertexId v) const { return static_cast<int>(at(v).size()); }
    const std::vector<Arc>& rotation(VertexId v) const { return at(v); }
    bool adjacent(VertexId u, VertexId v) const;
    int sign(VertexId u, VertexId v) const;
    std::vector<EdgeKey> edges() const;
    bool connected() const;

    // Structural invariants: simple, symmetric, consistent signs, connected.
    void validate() const;

    std::vector<FaceWalk> trace_faces() const;
    int euler_characteristic() const;
    bool orientability() const;
    SurfaceSpec surface_of() const;
    bool is_quadrangular() const;
    bool is_face_simple() const;
    // max over pairs of distinct faces of (#shared edges + #shared vertices
    // not on a shared edge); 0 when fewer than two faces.
    int face_touch_multiplicity() const;

    // Vertex flip: reverse rotation(v), negate incident signs. Embedding-preserving.
    void flip(VertexId v);
    // All-positive sign normalization via flips; requires orientability().
    Embedding normalized() const;

    // Dual adjacency: one entry per edge, joining the two faces on its sides.
    std::vector<std::pair<int, int>> dual_edges() const;

    // Position of u within rotation(v); throws if absent.
    int position_of(VertexId v, VertexId u) const;

    // Low-level mutation used by surgery and io. Caller re-validates.
    std::vector<std::vector<Arc>>& raw() { return rot_; }
    const std::vector<std::vector<Arc>>& raw() const { return rot_; }

private:
    const std::vector<Arc>& at(VertexId v) const;
    std::vector<std::vector<Arc>> rot_;
};

struct CertificateCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Certificate {
    int n = 0, m = 0, t = 0, face_count = 0, chi = 0;
    SurfaceSpec surface;
    bool face_simple = false;
    bool quadrangular = false;
    std::set<EdgeKey> missing_edges;
    std::vector<CertificateCheck> checks;
    bool ok() const;
    std::string summary_line() const;  // machine-readable one-liner
    std::string report() const;       // full human-readable report
};

struct Claim {
    int n = 0;
    int t = 0;
    SurfaceSpec surface;
    std::optional<std::set<EdgeKey>> missing_edges;  // checked when present
};

// Recomputes every quantity from the embedding; nothing trusted from claims.
Certificate certify(const Embedding& emb, const Claim& claim);

// Canonical faces of an embedding, as Squares (only valid for quadrangulations).
std::vector<Square> face_squares(const Embedding& emb);

// Find a face whose boundary matches `s` up to rotation/reflection.
std::optional<int> find_face(const std::vector<FaceWalk>& faces, const Square& s);

}  // namespace quad
