#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace coqkit {

using Int = mpz_class;
using Rat = mpq_class;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense row-major matrix over an exact ring.
template <class T>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    explicit Mat(std::size_t n) : Mat(n, n) {}
    Mat(std::initializer_list<std::initializer_list<long>> rows) {
        r_ = rows.size();
        c_ = r_ ? rows.begin()->size() : 0;
        a_.reserve(r_ * c_);
        for (const auto& row : rows) {
            if (row.size() != c_) throw std::invalid_argument("ragged matrix literal");
            for (long v : row) a_.emplace_back(v);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    std::size_t size() const { return r_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Mat transpose() const {
        Mat t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.c_ != y.r_) throw std::invalid_argument("matrix shape mismatch");
        Mat z(x.r_, y.c_);
        for (std::size_t i = 0; i < x.r_; ++i)
            for (std::size_t k = 0; k < x.c_; ++k) {
                if (x(i, k) == 0) continue;
                for (std::size_t j = 0; j < y.c_; ++j) z(i, j) += x(i, k) * y(k, j);
            }
        return z;
    }
    friend Mat operator+(Mat x, const Mat& y) {
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
        return x;
    }
    friend Mat operator-(Mat x, const Mat& y) {
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
        return x;
    }
    Mat operator-() const {
        Mat x = *this;
        for (auto& v : x.a_) v = -v;
        return x;
    }
    friend bool operator==(const Mat& x, const Mat& y) {
        return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
    }
    friend bool operator<(const Mat& x, const Mat& y) {
        if (x.r_ != y.r_) return x.r_ < y.r_;
        return x.a_ < y.a_;
    }

    const std::vector<T>& data() const { return a_; }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

inline Int pos_part(const Int& x) { return x > 0 ? Int(x) : Int(0); }
inline Int neg_part(const Int& x) { return x < 0 ? Int(-x) : Int(0); }

// Fraction-free determinant.
Int det(IntMat m);
std::size_t rank(const IntMat& m);
// Exact inverse of a unimodular matrix; throws DomainError otherwise.
IntMat unimodular_inverse(const IntMat& m);
RatMat to_rat(const IntMat& m);
// Inverse over Q; throws DomainError when singular.
RatMat inverse(const RatMat& m);
// Permutation matrix P with P(i, perm[i]) = 1.
IntMat perm_matrix(const std::vector<std::size_t>& perm);
std::string to_string(const IntMat& m);

}  // namespace coqkit
