#include "coqkit/arith.hpp"

#include <sstream>
#include <utility>

namespace coqkit {

Int det(IntMat m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("det of non-square matrix");
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntMat& src) {
    RatMat m = to_rat(src);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            Rat f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

RatMat to_rat(const IntMat& m) {
    RatMat q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(i, j);
    return q;
}

RatMat inverse(const RatMat& src) {
    const std::size_t n = src.rows();
    RatMat a = src, inv = RatMat::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) throw DomainError("singular matrix");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a(c, j), a(p, j));
            std::swap(inv(c, j), inv(p, j));
        }
        Rat piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

IntMat unimodular_inverse(const IntMat& m) {
    RatMat q = inverse(to_rat(m));
    IntMat out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (q(i, j).get_den() != 1) throw DomainError("matrix is not unimodular");
            out(i, j) = q(i, j).get_num();
        }
    return out;
}

IntMat perm_matrix(const std::vector<std::size_t>& perm) {
    IntMat p(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) p(i, perm[i]) = 1;
    return p;
}

std::string to_string(const IntMat& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace coqkit
