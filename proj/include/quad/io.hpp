#pragma once

#include <iosfwd>
#include <string>

#include "quad/core.hpp"

namespace quad {

// Text format, one file per embedding:
//   embedding n=<n> orientable=<0|1>
//   <v>: <u1><s><u2><s>...   one line per vertex, neighbors in rotation order
//   faces:                   optional trailing block, ignored on load
// Rotations are emitted starting at the smallest neighbor id, so
// write -> read -> write is byte-identical.
std::string serialize_embedding(const Embedding& emb, bool with_faces = false);
Embedding parse_embedding(const std::string& text);

Embedding load_embedding_file(const std::string& path);
void write_embedding_file(const std::string& path, const Embedding& emb,
                          bool with_faces = false);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace quad
