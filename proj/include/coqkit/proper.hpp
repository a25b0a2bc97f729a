#pragma once

#include "coqkit/cyclic.hpp"
#include "coqkit/invariants.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coqkit {

struct InOut {
    std::vector<std::size_t> ins, outs;
};
InOut in_out(const Quiver& q, std::size_t j);

// Every oriented path u -> j -> v turns right: theta(u,j) + theta(j,v) <= n-1.
bool is_proper_vertex(const COQ& coq, std::size_t j);

// Decided on the chordless cycles through j by their winding numbers.
bool is_proper_in_wiggle_class(const COQ& coq, std::size_t j, std::size_t cap = default_cycle_cap);
bool is_proper_in_wiggle_class(const COQ& coq, std::size_t j, const std::vector<Cycle>& chordless);
std::optional<std::size_t> first_improper_vertex(const COQ& coq, std::size_t cap = default_cycle_cap);
bool is_proper_coq(const COQ& coq, std::size_t cap = default_cycle_cap);

std::optional<COQ> realize_proper_at(const COQ& coq, std::size_t j, std::size_t cap = default_cycle_cap);
// Throws DomainError when j is not proper anywhere in the wiggle class.
COQ proper_mutate(const COQ& coq, std::size_t j, std::size_t cap = default_cycle_cap);
// The re-placement rule alone; requires j to be proper in coq.
COQ proper_mutate_at_proper(const COQ& coq, std::size_t j);

// Exhaustive search over cyclic orderings, one representative per wiggle class.
std::optional<CyclicOrdering> find_proper_ordering(const Quiver& q, std::size_t cap = default_cycle_cap);
std::optional<CyclicOrdering> candidate_ordering(const Quiver& q, std::size_t cap = default_cycle_cap);
// colors[v] in {-1, 0, 1}; arrows must go -1 -> 0, 0 -> 1 or 1 -> -1.
CyclicOrdering ordering_from_coloring(const Quiver& q, const std::vector<int>& colors);

struct TotallyProperVerdict {
    enum class Status { verified, refuted, budget_exceeded };
    Status status = Status::budget_exceeded;
    std::optional<COQ> witness;
    std::optional<std::size_t> witness_vertex;
    std::vector<std::size_t> path;  // proper mutations leading to the witness
    std::size_t explored = 0;
};
const char* to_string(TotallyProperVerdict::Status s);

struct TotallyProperOptions {
    std::size_t budget = 10000;
    std::size_t cap = default_cycle_cap;
    // At a fork, expand only at its point of return.
    bool prune_forks = true;
};
TotallyProperVerdict verify_totally_proper(const COQ& coq, const TotallyProperOptions& opts = {});

struct QuasiCartan {
    IntMat a;
    std::vector<std::size_t> order;
};
QuasiCartan quasi_cartan(const UnipotentCompanion& uc);
bool is_admissible(const QuasiCartan& a, const Quiver& q, std::size_t cap = default_cycle_cap);

// Values of a homomorphism H_1 -> Z/2 on the homology basis.
struct Gf2Assignment {
    std::vector<Cycle> basis;
    std::vector<int> bits;
};
std::optional<Gf2Assignment> admissible_homomorphism(const Quiver& q, std::size_t cap = default_cycle_cap);

}  // namespace coqkit
