#pragma once

#include "coqkit/poly.hpp"
#include "coqkit/quiver.hpp"

#include <optional>
#include <vector>

namespace coqkit {

// Unipotent upper-triangular U with U - U^T = -B read in the linear order.
struct UnipotentCompanion {
    IntMat u;
    std::vector<std::size_t> order;  // vertex indices, position a holds order[a]
};

UnipotentCompanion unipotent_companion(const Quiver& q, const std::vector<std::size_t>& order);
// Quiver on order-position names read back from U.
IntMat exchange_from_unipotent(const IntMat& u);
bool is_unipotent_upper(const IntMat& u);

IntMat unipotent_inverse(const IntMat& u);
IntMat cosquare(const IntMat& u);

// det(tU - U^T) by interpolation, cross-checked against det(tI - cosquare).
IntPoly alexander_polynomial(const IntMat& u);
IntPoly alexander_polynomial(const Quiver& q, const std::vector<std::size_t>& order);
Int markov_invariant(const IntMat& u);
Int markov_invariant(const Quiver& q, const std::vector<std::size_t>& order);

constexpr std::size_t default_minor_cap = 2000000;
// Span of coefficient vectors of all k x k minors of tU - U^T, in HNF.
PolyLattice alexander_lattice(const IntMat& u, std::size_t k, std::size_t minor_cap = default_minor_cap);

std::vector<Int> gcd_multiset(const IntMat& u);

// G with det +-1 and G U G^T = U'.
struct Congruence {
    UnipotentCompanion result;
    IntMat g;
};
bool verify_congruence(const IntMat& u, const IntMat& g, const IntMat& u2);

Congruence cyclic_shift_witness(const Quiver& q, const std::vector<std::size_t>& order);
// Swap of positions k and k+1 (0-based); requires u(k, k+1) = 0.
Congruence wiggle_witness(const UnipotentCompanion& uc, std::size_t k);
// Order must list In(vertex) before vertex before Out(vertex); the result uses
// the order with the vertex moved to the front and the quiver mutated there.
Congruence proper_mutation_witness(const Quiver& q, const std::vector<std::size_t>& order, std::size_t vertex);

bool palindrome_check(const IntPoly& p, std::size_t n);
bool det_identity_check(const Quiver& q, const std::vector<std::size_t>& order);

struct InvariantReport {
    std::size_t n = 0;
    IntPoly alexander;
    Int markov;
    Int det;
    std::size_t rank = 0;
    std::vector<Int> gcds;
    std::vector<std::pair<std::size_t, PolyLattice>> lattices;
    std::vector<IntPoly> frobenius;
};

InvariantReport invariant_report(const Quiver& q, const std::vector<std::size_t>& order,
                                 const std::vector<std::size_t>& ks = {});

}  // namespace coqkit
