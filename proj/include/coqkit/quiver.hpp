#pragma once

#include "coqkit/arith.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coqkit {

struct Arrow {
    std::string from, to;
    Int mult;
};

class Quiver {
public:
    Quiver() = default;
    // Validates skew-symmetry, zero diagonal and distinct names.
    Quiver(std::vector<std::string> vertices, IntMat b);
    static Quiver from_arrows(std::vector<std::string> vertices, const std::vector<Arrow>& arrows);
    // Vertices named "1".."n"; b must be skew-symmetric.
    static Quiver from_matrix(const IntMat& b);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& vertices() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const IntMat& b() const { return b_; }
    const Int& at(std::size_t i, std::size_t j) const { return b_(i, j); }
    std::size_t index(const std::string& v) const;
    bool has_vertex(const std::string& v) const { return lookup_.count(v) != 0; }
    std::vector<Arrow> arrows() const;

    friend bool operator==(const Quiver& x, const Quiver& y) {
        return x.names_ == y.names_ && x.b_ == y.b_;
    }

private:
    std::vector<std::string> names_;
    IntMat b_;
    std::map<std::string, std::size_t> lookup_;
};

Quiver mutate(const Quiver& q, std::size_t j);
Quiver mutate(const Quiver& q, const std::string& j);
IntMat mutate_matrix(const IntMat& b, std::size_t j);
Quiver opposite_arrows(const Quiver& q);
// Keeps the vertex order of q.
Quiver subquiver(const Quiver& q, const std::vector<std::string>& keep);
Quiver subquiver_by_index(const Quiver& q, const std::vector<std::size_t>& keep);
// Reorders vertices; the new i-th vertex is old perm[i].
Quiver relabel(const Quiver& q, const std::vector<std::size_t>& perm);

struct SimpleGraph {
    std::vector<std::string> vertices;
    std::vector<std::vector<char>> adj;
    // order[k] is the vertex with the k-th smallest name; rank is its inverse
    std::vector<std::size_t> order, rank;

    std::size_t size() const { return vertices.size(); }
    bool adjacent(std::size_t i, std::size_t j) const { return adj[i][j] != 0; }
    std::size_t edge_count() const;
    std::size_t components() const;
    // Neighbors sorted by name.
    std::vector<std::size_t> neighbors(std::size_t v) const;
};

SimpleGraph underlying_graph(const Quiver& q);

// Vertex indices, traversed in order and closing back to the first.
struct Cycle {
    std::vector<std::size_t> v;
    std::size_t length() const { return v.size(); }
    friend bool operator==(const Cycle& a, const Cycle& b) { return a.v == b.v; }
    friend bool operator<(const Cycle& a, const Cycle& b) { return a.v < b.v; }
};

// Rotate so that the vertex with the smallest name comes first.
Cycle canonical_cycle(std::vector<std::size_t> v, const SimpleGraph& g);
Cycle reversed(const Cycle& c, const SimpleGraph& g);
std::vector<std::string> cycle_names(const Cycle& c, const SimpleGraph& g);

constexpr std::size_t default_cycle_cap = 10000;
// COQKIT_CAP in the environment overrides the default cap.
std::size_t cycle_cap_from_env();

std::vector<Cycle> chordless_cycles(const SimpleGraph& g, std::size_t cap = default_cycle_cap);
// BFS spanning forest; each component is rooted at its smallest name and
// neighbors are visited in name order.
struct SpanningForest {
    static constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> roots, parent, depth;
    std::vector<std::size_t> bfs;  // parents precede children
    // Non-tree edges (u, v) with name(u) < name(v), in the order of homology_basis.
    std::vector<std::pair<std::size_t, std::size_t>> cotree;
    bool is_tree_edge(std::size_t u, std::size_t v) const { return parent[u] == v || parent[v] == u; }
};
SpanningForest spanning_forest(const SimpleGraph& g);

// One fundamental cycle per cotree edge (u, v): tree path u -> v, closed by v -> u.
std::vector<Cycle> homology_basis(const SimpleGraph& g);

// Arrow counts of a cycle against a quiver: forward arrows r, backward arrows l.
struct ArrowCounts {
    std::size_t forward = 0, backward = 0;
};
ArrowCounts arrow_counts(const Quiver& q, const Cycle& c);
bool is_oriented(const Quiver& q, const Cycle& c);

bool is_acyclic(const Quiver& q);
bool is_complete(const Quiver& q);
bool is_abundant(const Quiver& q);
bool is_tree(const Quiver& q);
bool is_vortex(const Quiver& q);
std::optional<std::array<std::size_t, 4>> contains_vortex(const Quiver& q);
bool is_vortex_free(const Quiver& q);
std::optional<std::size_t> is_fork(const Quiver& q);

Int det_b(const Quiver& q);
std::size_t rank_b(const Quiver& q);

}  // namespace coqkit
