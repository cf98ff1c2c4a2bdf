#include "quad/ledger.hpp"

#include <algorithm>
#include <sstream>

namespace quad {

std::string Classification::str() const {
    switch (cls) {
        case DiagonalClass::None: return "none";
        case DiagonalClass::Full: return "full";
        case DiagonalClass::Perfect: return "perfect";
        case DiagonalClass::NearlyPerfect:
            return "v" + std::to_string(exempt) + "-nearly-perfect";
    }
    return "?";
}

void Ledger::add(EdgeKey pair, const Square& underlying) {
    pair = edge_key(pair.first, pair.second);
    if (!underlying.has_diagonal(pair.first, pair.second))
        throw StructuralError("ledger: pair is not a diagonal of its square");
    if (by_pair_.count(pair)) throw StructuralError("ledger: diagonal already present");
    for (auto& [p, sq] : by_pair_)
        if (sq.same_face(underlying))
            throw StructuralError("ledger: underlying squares must be distinct");
    by_pair_[pair] = underlying;
    order_.push_back(pair);
}

void Ledger::drop(EdgeKey pair) {
    pair = edge_key(pair.first, pair.second);
    if (!by_pair_.erase(pair)) throw StructuralError("ledger: drop of absent diagonal");
    order_.erase(std::find(order_.begin(), order_.end(), pair));
}

bool Ledger::has(EdgeKey pair) const {
    return by_pair_.count(edge_key(pair.first, pair.second)) > 0;
}

const Square& Ledger::underlying(EdgeKey pair) const {
    auto it = by_pair_.find(edge_key(pair.first, pair.second));
    if (it == by_pair_.end()) throw StructuralError("ledger: unknown diagonal");
    return it->second;
}

void Ledger::rehome(EdgeKey pair, const Square& square) {
    pair = edge_key(pair.first, pair.second);
    auto it = by_pair_.find(pair);
    if (it == by_pair_.end()) throw StructuralError("ledger: rehome of absent diagonal");
    if (!square.has_diagonal(pair.first, pair.second))
        throw StructuralError("ledger: rehome target lacks the diagonal");
    for (auto& [p, sq] : by_pair_)
        if (p != pair && sq.same_face(square))
            throw StructuralError("ledger: rehome collides with another underlying square");
    it->second = square;
}

std::vector<Diagonal> Ledger::diagonals() const {
    std::vector<Diagonal> out;
    for (const auto& p : order_) out.push_back({p, by_pair_.at(p)});
    return out;
}

void Ledger::reserve(const Square& s, const std::string& tag) {
    reserved_[s.canon()] = tag;
}

void Ledger::release(const Square& s) {
    if (!reserved_.erase(s.canon())) throw StructuralError("ledger: release of unreserved square");
}

bool Ledger::is_reserved(const Square& s) const { return reserved_.count(s.canon()) > 0; }

std::vector<std::pair<Square, std::string>> Ledger::reservations() const {
    std::vector<std::pair<Square, std::string>> out;
    for (const auto& [canon, tag] : reserved_) out.push_back({Square(canon), tag});
    return out;
}

void Ledger::check_against(const Embedding& emb) const {
    auto faces = emb.trace_faces();
    for (const auto& [pair, sq] : by_pair_) {
        if (!find_face(faces, sq))
            throw StructuralError("ledger: underlying square of di(v" +
                                  std::to_string(pair.first) + ",v" +
                                  std::to_string(pair.second) + ") is not a current face");
    }
    for (const auto& [canon, tag] : reserved_)
        if (!find_face(faces, Square(canon)))
            throw StructuralError("ledger: reserved square (" + tag + ") is not a current face");
}

void Ledger::refresh_after(const SurgeryStep& step, const std::map<EdgeKey, Square>& overrides,
                           const std::set<EdgeKey>& expected_losses) {
    std::vector<std::vector<VertexId>> destroyed;
    for (const auto& s : step.destroyed_faces) destroyed.push_back(s.canon());
    auto is_destroyed = [&](const Square& s) {
        auto c = s.canon();
        return std::find(destroyed.begin(), destroyed.end(), c) != destroyed.end();
    };
    // Collect taken canons so re-homes stay pairwise distinct.
    auto taken = [&](EdgeKey self) {
        std::set<std::vector<VertexId>> t;
        for (auto& [p, sq] : by_pair_)
            if (p != self && !is_destroyed(sq)) t.insert(sq.canon());
        return t;
    };
    for (const auto& pair : std::vector<EdgeKey>(order_)) {
        Square& sq = by_pair_[pair];
        if (!is_destroyed(sq)) continue;
        auto ov = overrides.find(pair);
        if (ov != overrides.end()) {
            if (!ov->second.has_diagonal(pair.first, pair.second))
                throw StructuralError("ledger refresh: override lacks the diagonal");
            sq = ov->second;
            continue;
        }
        if (expected_losses.count(pair)) {
            drop(pair);
            continue;
        }
        auto used = taken(pair);
        bool placed = false;
        for (const auto& cand : step.created_faces) {
            if (!cand.has_diagonal(pair.first, pair.second)) continue;
            if (used.count(cand.canon())) continue;
            sq = cand;
            placed = true;
            break;
        }
        if (!placed)
            throw StructuralError("ledger refresh: diagonal di(v" + std::to_string(pair.first) +
                                  ",v" + std::to_string(pair.second) +
                                  ") lost its underlying square unexpectedly");
    }
    // Reservations on destroyed faces vanish with them only if explicitly
    // released first; a destroyed reserved square is a scheduling bug.
    for (const auto& [canon, tag] : reserved_)
        if (std::find(destroyed.begin(), destroyed.end(), canon) != destroyed.end())
            throw StructuralError("ledger refresh: reserved square (" + tag + ") was destroyed");
}

Classification Ledger::classify(const Embedding& emb) const {
    std::vector<EdgeKey> pairs;
    for (const auto& p : order_) pairs.push_back(p);
    return classify_subset(emb, pairs);
}

Classification Ledger::classify_subset(const Embedding& emb,
                                       const std::vector<EdgeKey>& pairs) const {
    std::vector<int> mult(emb.order() + 1, 0);
    for (const auto& p : pairs) {
        mult[p.first]++;
        mult[p.second]++;
    }
    bool perfect = true, full = true;
    std::vector<VertexId> zero;
    for (int v = 1; v <= emb.order(); ++v) {
        if (mult[v] == 0) {
            zero.push_back(v);
            perfect = full = false;
        } else if (mult[v] != 1) {
            perfect = false;
        }
    }
    if (pairs.empty()) return {DiagonalClass::None, 0};
    if (perfect) return {DiagonalClass::Perfect, 0};
    if (full) return {DiagonalClass::Full, 0};
    if (zero.size() == 1) {
        bool others_once = true;
        for (int v = 1; v <= emb.order(); ++v)
            if (v != zero[0] && mult[v] != 1) others_once = false;
        if (others_once) return {DiagonalClass::NearlyPerfect, zero[0]};
    }
    return {DiagonalClass::None, 0};
}

std::string Ledger::dump() const {
    std::ostringstream os;
    os << "diagonals:\n";
    for (const auto& p : order_)
        os << "  di(v" << p.first << ",v" << p.second << ") @ " << by_pair_.at(p).str() << "\n";
    os << "reserved:\n";
    for (const auto& [canon, tag] : reserved_) os << "  " << Square(canon).str() << "  # " << tag
                                                  << "\n";
    return os.str();
}

}  // namespace quad
