#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quad/core.hpp"
#include "quad/surgery.hpp"

namespace quad {

// A nonadjacent corner pair of a square face together with that face.
struct Diagonal {
    EdgeKey pair;
    Square underlying;
};

enum class DiagonalClass { None, Full, Perfect, NearlyPerfect };

struct Classification {
    DiagonalClass cls = DiagonalClass::None;
    VertexId exempt = 0;  // the missing vertex for NearlyPerfect
    std::string str() const;
};

// Diagonals with pairwise distinct underlying squares, plus the reservation
// book. Reserved squares are refused as surgery operands until released.
class Ledger {
public:
    void add(EdgeKey pair, const Square& underlying);
    void drop(EdgeKey pair);
    bool has(EdgeKey pair) const;
    const Square& underlying(EdgeKey pair) const;
    void rehome(EdgeKey pair, const Square& square);
    std::vector<Diagonal> diagonals() const;  // in insertion order
    size_t size() const { return order_.size(); }

    void reserve(const Square& s, const std::string& tag);
    void release(const Square& s);
    bool is_reserved(const Square& s) const;
    std::vector<std::pair<Square, std::string>> reservations() const;

    // Checks every diagonal sits on a current face with its pair opposite and
    // underlying squares are pairwise distinct; throws otherwise.
    void check_against(const Embedding& emb) const;

    // Re-home diagonals whose underlying square was destroyed by `step`.
    // Default target: first created face having the pair as a diagonal.
    // `overrides` force a specific created (or surviving) square per pair.
    // Crosscap steps drop the consumed face's diagonals only when listed in
    // `expected_losses`; an unexpected loss throws.
    void refresh_after(const SurgeryStep& step,
                       const std::map<EdgeKey, Square>& overrides = {},
                       const std::set<EdgeKey>& expected_losses = {});

    Classification classify(const Embedding& emb) const;
    // Classification of a subset of the ledger's pairs.
    Classification classify_subset(const Embedding& emb,
                                   const std::vector<EdgeKey>& pairs) const;

    std::string dump() const;

private:
    std::map<std::vector<VertexId>, std::string> reserved_;  // canon -> tag
    std::map<EdgeKey, Square> by_pair_;
    std::vector<EdgeKey> order_;
};

}  // namespace quad
