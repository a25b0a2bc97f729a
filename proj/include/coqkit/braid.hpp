#pragma once

#include "coqkit/invariants.hpp"
#include "coqkit/quiver.hpp"

#include <string>
#include <vector>

namespace coqkit {

enum class GenKind { sigma, sigma_inverse, rho };

// Indices are 1-based, as written in braid words.
struct BraidGenerator {
    GenKind kind;
    std::size_t index;
    friend bool operator==(const BraidGenerator& a, const BraidGenerator& b) {
        return a.kind == b.kind && a.index == b.index;
    }
};

// Applied left to right.
using BraidWord = std::vector<BraidGenerator>;

// "s2 S1 r3": s = sigma, S = sigma inverse, r = rho.
BraidWord parse_braid_word(const std::string& text);
std::string to_string(const BraidWord& w);
void check_word(const BraidWord& w, std::size_t n);

struct MatrixAction {
    IntMat u;
    IntMat g;  // u = g * input * g^T
};

MatrixAction act_sigma(const IntMat& u, std::size_t k);
MatrixAction act_sigma_inverse(const IntMat& u, std::size_t k);
MatrixAction act_rho(const IntMat& u, std::size_t i);
MatrixAction act_generator(const IntMat& u, const BraidGenerator& gen);
MatrixAction act_word(const IntMat& u, const BraidWord& w);

struct LinearlyOrderedQuiver {
    Quiver quiver;
    std::vector<std::size_t> order;
    friend bool operator==(const LinearlyOrderedQuiver& a, const LinearlyOrderedQuiver& b) {
        return a.quiver == b.quiver && a.order == b.order;
    }
};

struct LoqAction {
    LinearlyOrderedQuiver loq;
    IntMat g;
};

LoqAction act_word(const LinearlyOrderedQuiver& loq, const BraidWord& w);

// Proper mutation at position k (1-based) followed by moving that vertex to the front.
BraidWord mutation_word(std::size_t k, std::size_t n);
// One-step rotation of the linear order.
BraidWord cyclic_shift_word(std::size_t n);

// All sign-flip images, subsets taken without the first position; deduplicated.
std::vector<LinearlyOrderedQuiver> reversal_orbit(const LinearlyOrderedQuiver& loq);

}  // namespace coqkit
