#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quad/core.hpp"

namespace quad {

enum class HandleType { I, II, III, IV };

std::string handle_type_name(HandleType t);

enum class SurgeryKind { Disc, Handle, Crosscap, CrosscapRemoval };

// Audit record of one surgery, sufficient for replay and ledger refresh.
struct SurgeryStep {
    SurgeryKind kind = SurgeryKind::Disc;
    HandleType handle = HandleType::I;
    Square outer;                       // disc: the subdivided face; crosscap: the face
    Square inner;                       // handle only
    std::pair<VertexId, VertexId> new_vertices{0, 0};  // disc only
    std::pair<EdgeKey, EdgeKey> removed_edges{{0, 0}, {0, 0}};  // crosscap removal
    std::vector<Square> created_faces;   // in operation order
    std::vector<Square> destroyed_faces;
    std::string log_line() const;
};

// The three quadrangularity-preserving surgeries of the construction plus the
// crosscap inverse. Each is a pure function: preconditions throw
// StructuralError, postconditions (delta accounting, created faces present)
// are asserted internally.

// Subdivide face f=(s0,s1,s2,s3) along diagonal (s0,s2), adding fresh
// vertices vi, vj joined to s0 and s2. DeltaV=+2, DeltaE=+4, DeltaF=+2, Dchi=0.
Embedding disc_addition(const Embedding& e, const Square& f, VertexId vi, VertexId vj,
                        SurgeryStep* step = nullptr);

// Handle addition between outer (v1..v4) and inner (u1..u4), listings as the
// caller's role assignment. DeltaV=0, DeltaE=+4, DeltaF=+2, Dchi=-2.
Embedding handle_addition(const Embedding& e, HandleType type, const Square& outer,
                          const Square& inner, SurgeryStep* step = nullptr);

// Crosscap addition inside face f=(v1..v4): adds both diagonals.
// DeltaV=0, DeltaE=+2, DeltaF=+1, Dchi=-1; result nonorientable.
Embedding crosscap_addition(const Embedding& e, const Square& f, SurgeryStep* step = nullptr);

// Inverse of crosscap addition: deletes e1, e2 and replaces the crosscap by a
// disc. DeltaE=-2, DeltaF=-1, Dchi=+1.
Embedding crosscap_removal(const Embedding& e, EdgeKey e1, EdgeKey e2,
                           SurgeryStep* step = nullptr);

// Edge patterns per handle type, in terms of role listings.
std::vector<EdgeKey> handle_new_edges(HandleType type, const Square& outer, const Square& inner);
std::vector<Square> handle_created_faces(HandleType type, const Square& outer,
                                         const Square& inner);

// Generic local rewrite: replace `destroyed` faces by `created` ones,
// introducing new vertices/edges appearing only in `created` and removing
// `deleted_edges`. Validates the rewrite and the resulting embedding.
Embedding apply_patch(const Embedding& e, const std::vector<Square>& destroyed,
                      const std::vector<std::vector<VertexId>>& created,
                      const std::vector<EdgeKey>& deleted_edges, int new_vertex_count);

std::optional<SurgeryStep> parse_log_line(const std::string& line);
Embedding replay_step(const Embedding& e, const SurgeryStep& step);

}  // namespace quad
