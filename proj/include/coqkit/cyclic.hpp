#pragma once

#include "coqkit/quiver.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coqkit {

// Cyclic arrangement of a quiver's vertex indices, stored rotated so the
// vertex with the smallest name is first.
class CyclicOrdering {
public:
    CyclicOrdering() = default;
    CyclicOrdering(const Quiver& q, std::vector<std::size_t> seq);
    static CyclicOrdering from_names(const Quiver& q, const std::vector<std::string>& names);
    // Vertex list order of q.
    static CyclicOrdering standard(const Quiver& q);

    std::size_t size() const { return seq_.size(); }
    const std::vector<std::size_t>& seq() const { return seq_; }
    std::size_t at(std::size_t k) const { return seq_[k % seq_.size()]; }
    std::size_t pos(std::size_t v) const { return pos_[v]; }
    std::vector<std::string> names(const Quiver& q) const;

    friend bool operator==(const CyclicOrdering& a, const CyclicOrdering& b) { return a.seq_ == b.seq_; }
    friend bool operator<(const CyclicOrdering& a, const CyclicOrdering& b) { return a.seq_ < b.seq_; }

private:
    std::vector<std::size_t> seq_, pos_;
};

struct COQ {
    Quiver quiver;
    CyclicOrdering order;
};

struct WindingSignature {
    std::vector<Cycle> basis;
    std::vector<long> winds;
    friend bool operator==(const WindingSignature& a, const WindingSignature& b) {
        return a.basis == b.basis && a.winds == b.winds;
    }
};

using Wiggle = std::pair<std::size_t, std::size_t>;

std::size_t distance(const CyclicOrdering& s, std::size_t a, std::size_t b);
long winding(const Quiver& q, const CyclicOrdering& s, const Cycle& c);
long winding(const COQ& coq, const Cycle& c);

bool is_wiggle(const COQ& coq, std::size_t u, std::size_t v);
COQ apply_wiggle(const COQ& coq, std::size_t u, std::size_t v);
CyclicOrdering swap_adjacent(const Quiver& q, const CyclicOrdering& s, std::size_t u, std::size_t v);

WindingSignature winding_signature(const COQ& coq);
bool wiggle_equivalent(const Quiver& q, const CyclicOrdering& a, const CyclicOrdering& b);

// Orderings whose windings on the given cycles equal the targets; extra
// constraints theta(u,j) + theta(j,v) <= n-1 are added for each listed triple.
struct OrderingConstraints {
    std::vector<Cycle> cycles;
    std::vector<long> winds;
    std::vector<std::array<std::size_t, 3>> arcs;
};
std::optional<CyclicOrdering> solve_ordering(const Quiver& q, const OrderingConstraints& c);
// targets.basis must span the cycle space of the underlying graph.
std::optional<CyclicOrdering> construct_ordering(const Quiver& q, const WindingSignature& targets);

std::vector<Wiggle> wiggle_path(const Quiver& q, const CyclicOrdering& from, const CyclicOrdering& to);

COQ opposite(const COQ& coq);

}  // namespace coqkit
