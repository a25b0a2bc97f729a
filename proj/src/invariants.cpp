#include "coqkit/invariants.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace coqkit {

UnipotentCompanion unipotent_companion(const Quiver& q, const std::vector<std::size_t>& order) {
    const std::size_t n = q.size();
    if (order.size() != n) throw DomainError("order does not cover the quiver");
    std::vector<char> seen(n, 0);
    for (auto v : order) {
        if (v >= n || seen[v]) throw DomainError("order repeats or misses a vertex");
        seen[v] = 1;
    }
    UnipotentCompanion uc{IntMat::identity(n), order};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) uc.u(a, b) = -q.at(order[a], order[b]);
    return uc;
}

IntMat exchange_from_unipotent(const IntMat& u) { return u.transpose() - u; }

bool is_unipotent_upper(const IntMat& u) {
    for (std::size_t i = 0; i < u.rows(); ++i) {
        if (u(i, i) != 1) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (u(i, j) != 0) return false;
    }
    return true;
}

IntMat unipotent_inverse(const IntMat& u) {
    if (!is_unipotent_upper(u)) throw DomainError("matrix is not unipotent upper-triangular");
    const std::size_t n = u.rows();
    IntMat inv = IntMat::identity(n);
    // back substitution column by column
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = c; i-- > 0;) {
            Int s = 0;
            for (std::size_t k = i + 1; k <= c; ++k) s += u(i, k) * inv(k, c);
            inv(i, c) = -s;
        }
    return inv;
}

IntMat cosquare(const IntMat& u) { return unipotent_inverse(u).transpose() * u; }

namespace {

IntMat pencil_at(const IntMat& u, long t) {
    IntMat m = u.transpose();
    const std::size_t n = u.rows();
    IntMat r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = u(i, j) * t - m(i, j);
    return r;
}

using i128 = __int128;

// Bareiss in machine integers; false on overflow.
bool det_fast(std::vector<long long> m, std::size_t n, long long& out) {
    if (n == 0) {
        out = 1;
        return true;
    }
    constexpr i128 lim = std::numeric_limits<long long>::max();
    long long sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k * n + k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p * n + k] == 0) ++p;
            if (p == n) {
                out = 0;
                return true;
            }
            for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                i128 v = static_cast<i128>(m[i * n + j]) * m[k * n + k] - static_cast<i128>(m[i * n + k]) * m[k * n + j];
                v /= prev;
                if (v > lim || v < -lim) return false;
                m[i * n + j] = static_cast<long long>(v);
            }
        prev = m[k * n + k];
    }
    out = sign * m[n * n - 1];
    return true;
}

Int minor_det(const IntMat& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
              bool small) {
    const std::size_t k = rows.size();
    if (small) {
        std::vector<long long> buf(k * k);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) buf[a * k + b] = m(rows[a], cols[b]).get_si();
        long long d;
        if (det_fast(std::move(buf), k, d)) return Int(static_cast<long>(d));
    }
    IntMat sub(k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(rows[a], cols[b]);
    return det(std::move(sub));
}

bool fits_small(const IntMat& m) {
    for (const auto& x : m.data())
        if (!x.fits_slong_p() || abs(x) > 1000000) return false;
    return true;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

IntPoly alexander_polynomial(const IntMat& u) {
    const std::size_t n = u.rows();
    std::vector<Int> values;
    for (std::size_t t = 0; t <= n; ++t) values.push_back(det(pencil_at(u, static_cast<long>(t))));
    IntPoly by_interp = interpolate(values);
    IntPoly by_char = charpoly(cosquare(u));
    if (!(by_interp == by_char)) throw std::logic_error("Alexander polynomial computations disagree");
    return by_interp;
}

IntPoly alexander_polynomial(const Quiver& q, const std::vector<std::size_t>& order) {
    return alexander_polynomial(unipotent_companion(q, order).u);
}

Int markov_invariant(const IntMat& u) {
    IntMat c = cosquare(u);
    Int tr = 0;
    for (std::size_t i = 0; i < c.rows(); ++i) tr += c(i, i);
    return Int(static_cast<long>(u.rows())) - tr;
}

Int markov_invariant(const Quiver& q, const std::vector<std::size_t>& order) {
    return markov_invariant(unipotent_companion(q, order).u);
}

PolyLattice alexander_lattice(const IntMat& u, std::size_t k, std::size_t minor_cap) {
    const std::size_t n = u.rows();
    if (k < 1 || k > n) throw DomainError("lattice index k must satisfy 1 <= k <= n");
    Int count;
    mpz_bin_uiui(count.get_mpz_t(), n, k);
    count *= count;
    if (count > Int(static_cast<unsigned long>(minor_cap)))
        throw ResourceError("minor count " + count.get_str() + " exceeds cap");
    std::vector<IntMat> pencils;
    bool small = true;
    for (std::size_t t = 0; t <= k; ++t) {
        pencils.push_back(pencil_at(u, static_cast<long>(t)));
        small = small && fits_small(pencils.back());
    }
    PolyLattice lat(k + 1);
    std::vector<std::size_t> rows(k), cols(k);
    std::iota(rows.begin(), rows.end(), 0);
    std::vector<Int> values(k + 1);
    do {
        std::iota(cols.begin(), cols.end(), 0);
        do {
            bool zero = true;
            for (std::size_t t = 0; t <= k; ++t) {
                values[t] = minor_det(pencils[t], rows, cols, small);
                zero = zero && values[t] == 0;
            }
            if (!zero) lat.add(interpolate(values));
        } while (next_combination(cols, n));
    } while (next_combination(rows, n));
    return lat;
}

std::vector<Int> gcd_multiset(const IntMat& u) {
    const std::size_t n = u.rows();
    std::vector<Int> out;
    for (std::size_t r = 0; r < n; ++r) {
        Int g = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == r) continue;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), u(r, j).get_mpz_t());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), u(j, r).get_mpz_t());
        }
        out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool verify_congruence(const IntMat& u, const IntMat& g, const IntMat& u2) {
    Int d = det(g);
    if (d != 1 && d != -1) return false;
    return g * u * g.transpose() == u2;
}

Congruence cyclic_shift_witness(const Quiver& q, const std::vector<std::size_t>& order) {
    const std::size_t n = q.size();
    auto uc = unipotent_companion(q, order);
    if (n <= 1) return Congruence{uc, IntMat::identity(n)};
    std::vector<std::size_t> rotated(order.begin() + 1, order.end());
    rotated.push_back(order.front());
    auto target = unipotent_companion(q, rotated);
    // I + B_1^T, where B_1 keeps only the first row of B in this order
    IntMat shear = IntMat::identity(n);
    for (std::size_t b = 1; b < n; ++b) shear(b, 0) = q.at(order[0], order[b]);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = (i + 1) % n;
    IntMat g = perm_matrix(perm) * shear;
    if (!verify_congruence(uc.u, g, target.u)) throw std::logic_error("cyclic shift witness failed");
    return Congruence{target, g};
}

Congruence wiggle_witness(const UnipotentCompanion& uc, std::size_t k) {
    const std::size_t n = uc.u.rows();
    if (k + 1 >= n) throw DomainError("wiggle position out of range");
    if (uc.u(k, k + 1) != 0) throw DomainError("wiggled vertices are adjacent");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[k], perm[k + 1]);
    IntMat s = perm_matrix(perm);
    UnipotentCompanion out{s * uc.u * s.transpose(), uc.order};
    std::swap(out.order[k], out.order[k + 1]);
    return Congruence{out, s};
}

Congruence proper_mutation_witness(const Quiver& q, const std::vector<std::size_t>& order, std::size_t vertex) {
    const std::size_t n = q.size();
    auto uc = unipotent_companion(q, order);
    std::size_t k = n;
    for (std::size_t a = 0; a < n; ++a)
        if (order[a] == vertex) k = a;
    if (k == n) throw DomainError("vertex not in order");
    for (std::size_t a = 0; a < n; ++a) {
        const Int& b = q.at(order[a], vertex);
        if ((b > 0 && a > k) || (b < 0 && a < k))
            throw DomainError("order does not place In(k) before k before Out(k)");
    }
    // W = J - N E_kk with N = U - I and J the sign flip at k
    IntMat w = IntMat::identity(n);
    w(k, k) = -1;
    for (std::size_t i = 0; i < k; ++i) w(i, k) = -uc.u(i, k);
    std::vector<std::size_t> perm{k}, new_order{vertex};
    for (std::size_t a = 0; a < n; ++a)
        if (a != k) perm.push_back(a), new_order.push_back(order[a]);
    IntMat g = perm_matrix(perm) * w;
    auto target = unipotent_companion(mutate(q, vertex), new_order);
    if (!verify_congruence(uc.u, g, target.u)) throw std::logic_error("proper mutation witness failed");
    return Congruence{target, g};
}

bool palindrome_check(const IntPoly& p, std::size_t n) {
    // p(t) = (-t)^n p(1/t)  <=>  c_i = (-1)^n c_{n-i}
    if (p.degree() > static_cast<long>(n)) return false;
    for (std::size_t i = 0; i <= n; ++i) {
        Int mirrored = p.coeff(n - i);
        if (n % 2 == 1) mirrored = -mirrored;
        if (p.coeff(i) != mirrored) return false;
    }
    return true;
}

bool det_identity_check(const Quiver& q, const std::vector<std::size_t>& order) {
    IntPoly d = alexander_polynomial(q, order);
    Int rhs = d(Int(1));
    if (q.size() % 2 == 1) rhs = -rhs;
    return det_b(q) == rhs;
}

InvariantReport invariant_report(const Quiver& q, const std::vector<std::size_t>& order,
                                 const std::vector<std::size_t>& ks) {
    InvariantReport r;
    auto uc = unipotent_companion(q, order);
    r.n = q.size();
    r.alexander = alexander_polynomial(uc.u);
    r.markov = markov_invariant(uc.u);
    r.det = det_b(q);
    r.rank = rank_b(q);
    r.gcds = gcd_multiset(uc.u);
    for (auto k : ks) r.lattices.emplace_back(k, alexander_lattice(uc.u, k));
    r.frobenius = frobenius_form(cosquare(uc.u));
    return r;
}

}  // namespace coqkit
