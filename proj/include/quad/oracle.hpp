#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quad/core.hpp"

namespace quad {

struct SimpleGraph {
    int n = 0;
    std::vector<EdgeKey> edges;  // sorted, u<v
    static SimpleGraph complete(int n);
    SimpleGraph minus(const std::vector<EdgeKey>& removed) const;
    bool has_edge(VertexId u, VertexId v) const;
    int degree(VertexId v) const;
};

// All 4-cycles of the graph, once each up to rotation/reflection, with
// vertices listed so the lexicographically smallest form is stored.
std::vector<Square> enumerate_quadrilaterals(const SimpleGraph& g);

// A face pattern: 4 entries, 0 meaning wildcard. Matches a 4-cycle when some
// rotation or reflection agrees on all named corners.
using FacePattern = std::vector<VertexId>;
bool pattern_matches(const FacePattern& pat, const Square& sq);

struct SearchProblem {
    SimpleGraph graph;
    std::optional<int> target_chi;
    std::optional<bool> orientable;         // nullopt = either
    std::optional<bool> face_simple;        // require or forbid when set
    std::vector<FacePattern> required_faces;
    uint64_t node_cap = 200'000'000;
    int max_solutions = 1;                  // stop after this many
};

struct ResourceCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchResult {
    bool complete = false;  // search space exhausted
    std::vector<Embedding> solutions;
    uint64_t nodes = 0;
    uint64_t covers_checked = 0;
};

// Exact-cover search: select m/2 quadrilaterals covering each edge exactly
// twice, then assemble a signed rotation system (unique up to vertex flips)
// and filter by the problem's constraints. Complete when not capped.
SearchResult search(const SearchProblem& problem);

// Assemble a signed rotation system whose faces are exactly `faces`.
// Fails (nullopt) when the corners do not chain into umbrellas or the edge
// sides are orientation-inconsistent.
std::optional<Embedding> assemble(const SimpleGraph& g, const std::vector<Square>& faces);

// Exhaustive test used for n'(S_0): does any n-vertex simple graph have a
// face-simple quadrangular embedding in the sphere?
bool exists_face_simple_sphere_quadrangulation(int n, uint64_t node_cap = 200'000'000);

// Problem-file format (External Interfaces):
//   graph K<n> minus {v1v2, ...}
//   chi <int>            (optional)
//   orientable true|false|either
//   face-simple true|false   (optional)
//   require-face v1 v2 x v3  (repeatable, x = wildcard)
SearchProblem parse_problem(const std::string& text);

}  // namespace quad
