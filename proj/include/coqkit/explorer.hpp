#pragma once

#include "coqkit/invariants.hpp"
#include "coqkit/poly.hpp"
#include "coqkit/proper.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coqkit {

constexpr std::size_t max_canonical_size = 10;

// Lower triangle, row by row, of the relabeled matrix; minimal over all relabelings.
std::vector<Int> canonical_key(const Quiver& q);
// new vertex i = old perm[i]
std::vector<std::size_t> canonical_permutation(const Quiver& q);
// Vertices renamed "1".."n" in canonical position order.
Quiver canonical_form(const Quiver& q);

struct ExplorationLimits {
    std::size_t max_quivers = 10000;
    std::size_t max_depth = 1000;
    long max_entry = 1000;
    // false: dedup labeled quivers by their exact matrix (needed above max_canonical_size)
    bool up_to_relabeling = true;
};
void validate(const ExplorationLimits& limits);

struct ClassMember {
    Quiver quiver;
    std::optional<CyclicOrdering> order;
    std::size_t depth = 0;
    std::optional<std::size_t> fork_return;
    Int det;
    std::size_t rank = 0;
    std::optional<IntPoly> alexander;
    std::optional<Int> markov;
};

struct ClassReport {
    std::vector<ClassMember> members;
    // undirected exchange-graph edges between member indices
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    bool complete = true;
    std::size_t explored = 0;
    bool up_to_relabeling = true;
    std::vector<std::string> notes;
};

ClassReport mutation_class(const Quiver& q, const ExplorationLimits& limits = {});
// Nodes are wiggle classes; members carry a representative ordering.
ClassReport proper_mutation_class(const COQ& coq, const ExplorationLimits& limits = {},
                                  std::size_t cap = default_cycle_cap);
// Forks are expanded only at their point of return.
ClassReport forkless_part(const Quiver& q, const ExplorationLimits& limits = {});
bool class_contains(const ClassReport& report, const Quiver& q);

std::string to_dot(const ClassReport& report);

struct Fingerprint {
    IntPoly alexander;
    Int markov;
    Int det;
    std::vector<Int> gcds;
    std::vector<PolyLattice> lattices;
    std::vector<IntPoly> frobenius;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const Quiver& q, const std::vector<std::size_t>& order, const std::vector<std::size_t>& ks);

struct CollisionGroup {
    IntPoly alexander;
    std::vector<std::size_t> members;
    // members that no invariant in the fingerprint separates
    std::vector<std::vector<std::size_t>> unresolved;
};

struct CollisionReport {
    std::vector<Fingerprint> fingerprints;
    std::vector<CollisionGroup> groups;  // groups sharing Alexander polynomial, size >= 2
};

CollisionReport collision_scan(const std::vector<COQ>& family, const std::vector<std::size_t>& ks);

}  // namespace coqkit
