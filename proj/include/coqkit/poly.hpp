#pragma once

#include "coqkit/arith.hpp"

#include <string>
#include <vector>

namespace coqkit {

// Integer polynomial, constant term first, no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> c);
    IntPoly(std::initializer_list<long> c);
    static IntPoly monomial(long coeff, std::size_t deg);

    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    Int operator()(const Int& t) const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator<(const IntPoly& a, const IntPoly& b) { return a.c_ < b.c_; }

    // Exact division; throws DomainError if there is a remainder.
    IntPoly divexact(const IntPoly& d) const;
    std::string str(const std::string& var = "t") const;

private:
    std::vector<Int> c_;
    void trim();
};

IntPoly power(const IntPoly& p, unsigned e);

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> c);
    explicit RatPoly(const IntPoly& p);

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Rat& lead() const { return c_.back(); }
    RatPoly monic() const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    // Quotient and remainder.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;
    // Integer coefficients required.
    IntPoly to_int() const;

private:
    std::vector<Rat> c_;
    void trim();
};

// Polynomial of degree <= d through (0, v[0]), ..., (d, v[d]); coefficients must be integers.
IntPoly interpolate(const std::vector<Int>& values);

// Z-lattice of coefficient vectors of length dim, kept in row Hermite normal form:
// pivots strictly move right, are positive, and entries above a pivot lie in [0, pivot).
class PolyLattice {
public:
    explicit PolyLattice(std::size_t dim = 0) : dim_(dim) {}
    std::size_t dim() const { return dim_; }
    const std::vector<std::vector<Int>>& rows() const { return rows_; }
    void add(std::vector<Int> v);
    void add(const IntPoly& p);
    bool contains(std::vector<Int> v) const;
    friend bool operator==(const PolyLattice& a, const PolyLattice& b) {
        return a.dim_ == b.dim_ && a.rows_ == b.rows_;
    }

private:
    std::size_t dim_;
    std::vector<std::vector<Int>> rows_;
    std::vector<std::size_t> pivots_;
    void normalize();
};

// Throws DomainError on dimension mismatch.
bool lattice_equal(const PolyLattice& a, const PolyLattice& b);

// Invariant factors of tI - m over Q[t] that are not constants, each monic and
// dividing the next.
std::vector<IntPoly> frobenius_form(const RatMat& m);
std::vector<IntPoly> frobenius_form(const IntMat& m);

// Characteristic polynomial det(tI - m) by Faddeev-LeVerrier.
IntPoly charpoly(const IntMat& m);

}  // namespace coqkit
