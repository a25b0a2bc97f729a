#include "coqkit/poly.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace coqkit {

IntPoly::IntPoly(std::vector<Int> c) : c_(std::move(c)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> c) {
    for (long v : c) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::monomial(long coeff, std::size_t deg) {
    std::vector<Int> c(deg + 1);
    c[deg] = coeff;
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int IntPoly::operator()(const Int& t) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
    auto [q, r] = RatPoly(*this).divmod(RatPoly(d));
    if (!r.is_zero()) throw DomainError("polynomial division leaves a remainder");
    return q.to_int();
}

std::string IntPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Int& a = c_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        Int mag = abs(a);
        if (first)
            os << (a < 0 ? "-" : "");
        else
            os << (a < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i > 0) {
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

IntPoly power(const IntPoly& p, unsigned e) {
    IntPoly r{1};
    for (unsigned i = 0; i < e; ++i) r = r * p;
    return r;
}

RatPoly::RatPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }

RatPoly::RatPoly(const IntPoly& p) {
    for (const auto& v : p.coeffs()) c_.emplace_back(v);
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::monic() const {
    if (c_.empty()) return *this;
    RatPoly r = *this;
    Rat l = lead();
    for (auto& v : r.c_) v /= l;
    return r;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rat> r = c_;
    if (r.size() < d.c_.size()) return {RatPoly(), *this};
    std::vector<Rat> q(r.size() - d.c_.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        Rat f = r[k + d.c_.size() - 1] / d.lead();
        q[k] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] -= f * d.c_[j];
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

IntPoly RatPoly::to_int() const {
    std::vector<Int> c;
    for (const auto& v : c_) {
        if (v.get_den() != 1) throw DomainError("polynomial has non-integer coefficients");
        c.push_back(v.get_num());
    }
    return IntPoly(std::move(c));
}

namespace {

// Inverse Vandermonde matrix on nodes 0..d, scaled to integers: inv = w / scale.
struct ScaledInverse {
    IntMat w;
    Int scale;
};

const ScaledInverse& vandermonde_inverse(std::size_t d) {
    static std::mutex mu;
    static std::map<std::size_t, ScaledInverse> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    RatMat v(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        Rat p = 1;
        for (std::size_t j = 0; j <= d; ++j) {
            v(i, j) = p;
            p *= static_cast<long>(i);
        }
    }
    RatMat inv = inverse(v);
    Int scale = 1;
    for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t j = 0; j <= d; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), inv(i, j).get_den_mpz_t());
    ScaledInverse s{IntMat(d + 1), scale};
    for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t j = 0; j <= d; ++j) {
            Rat x = inv(i, j) * Rat(scale);
            s.w(i, j) = x.get_num();
        }
    return cache.emplace(d, std::move(s)).first->second;
}

}  // namespace

IntPoly interpolate(const std::vector<Int>& values) {
    if (values.empty()) return IntPoly();
    const auto& inv = vandermonde_inverse(values.size() - 1);
    std::vector<Int> c(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < values.size(); ++j)
            if (values[j] != 0) acc += inv.w(i, j) * values[j];
        if (!mpz_divisible_p(acc.get_mpz_t(), inv.scale.get_mpz_t()))
            throw std::logic_error("interpolated coefficient is not an integer");
        mpz_divexact(c[i].get_mpz_t(), acc.get_mpz_t(), inv.scale.get_mpz_t());
    }
    return IntPoly(std::move(c));
}

void PolyLattice::add(const IntPoly& p) {
    if (p.degree() >= static_cast<long>(dim_)) throw DomainError("polynomial degree exceeds lattice bound");
    std::vector<Int> v(dim_);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) v[i] = p.coeffs()[i];
    add(std::move(v));
}

void PolyLattice::add(std::vector<Int> v) {
    if (v.size() != dim_) throw DomainError("lattice vector has wrong length");
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim_; ++c) {
        if (v[c] == 0) continue;
        while (r < rows_.size() && pivots_[r] < c) ++r;
        if (r < rows_.size() && pivots_[r] == c) {
            auto& row = rows_[r];
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), row[c].get_mpz_t(), v[c].get_mpz_t());
            Int a = row[c] / g, b = v[c] / g;
            for (std::size_t j = c; j < dim_; ++j) {
                Int nr = s * row[j] + t * v[j];
                v[j] = a * v[j] - b * row[j];
                row[j] = nr;
            }
        } else {
            rows_.insert(rows_.begin() + static_cast<long>(r), std::move(v));
            pivots_.insert(pivots_.begin() + static_cast<long>(r), c);
            break;
        }
    }
    normalize();
}

void PolyLattice::normalize() {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::size_t p = pivots_[i];
        if (rows_[i][p] < 0)
            for (auto& x : rows_[i]) x = -x;
        for (std::size_t j = 0; j < i; ++j) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), rows_[j][p].get_mpz_t(), rows_[i][p].get_mpz_t());
            if (q == 0) continue;
            for (std::size_t c = p; c < dim_; ++c) rows_[j][c] -= q * rows_[i][c];
        }
    }
}

bool PolyLattice::contains(std::vector<Int> v) const {
    if (v.size() != dim_) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::size_t p = pivots_[i];
        for (std::size_t c = 0; c < p; ++c)
            if (v[c] != 0) return false;
        if (!mpz_divisible_p(v[p].get_mpz_t(), rows_[i][p].get_mpz_t())) return false;
        Int q = v[p] / rows_[i][p];
        for (std::size_t c = p; c < dim_; ++c) v[c] -= q * rows_[i][c];
    }
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

bool lattice_equal(const PolyLattice& a, const PolyLattice& b) {
    if (a.dim() != b.dim()) throw DomainError("lattices have different degree bounds");
    return a == b;
}

std::vector<IntPoly> frobenius_form(const RatMat& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<RatPoly>> a(n, std::vector<RatPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rat> c{-m(i, j)};
            if (i == j) c.push_back(Rat(1));
            a[i][j] = RatPoly(std::move(c));
        }
    std::vector<RatPoly> diag;
    for (std::size_t k = 0; k < n; ++k) {
        for (;;) {
            std::size_t bi = n, bj = n;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (!a[i][j].is_zero() && (bi == n || a[i][j].degree() < a[bi][bj].degree())) bi = i, bj = j;
            if (bi == n) break;
            std::swap(a[k], a[bi]);
            for (std::size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][bj]);
            bool clean = true;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (a[i][k].is_zero()) continue;
                auto [q, r] = a[i][k].divmod(a[k][k]);
                for (std::size_t j = k; j < n; ++j) a[i][j] = a[i][j] - q * a[k][j];
                if (!r.is_zero()) clean = false;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (a[k][j].is_zero()) continue;
                auto [q, r] = a[k][j].divmod(a[k][k]);
                for (std::size_t i = k; i < n; ++i) a[i][j] = a[i][j] - q * a[i][k];
                if (!r.is_zero()) clean = false;
            }
            if (!clean) continue;
            bool divides = true;
            for (std::size_t i = k + 1; i < n && divides; ++i)
                for (std::size_t j = k + 1; j < n && divides; ++j)
                    if (!a[i][j].divmod(a[k][k]).second.is_zero()) {
                        for (std::size_t c = k; c < n; ++c) a[k][c] = a[k][c] + a[i][c];
                        divides = false;
                    }
            if (divides) break;
        }
        diag.push_back(a[k][k].monic());
    }
    std::vector<IntPoly> out;
    for (const auto& d : diag)
        if (d.degree() >= 1) out.push_back(d.to_int());
    return out;
}

std::vector<IntPoly> frobenius_form(const IntMat& m) { return frobenius_form(to_rat(m)); }

IntPoly charpoly(const IntMat& a) {
    const std::size_t n = a.rows();
    std::vector<Int> c(n + 1);
    c[n] = 1;
    IntMat mk(n);
    for (std::size_t k = 1; k <= n; ++k) {
        IntMat next = a * mk;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        mk = next;
        IntMat am = a * mk;
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        if (!mpz_divisible_ui_p(tr.get_mpz_t(), k)) throw std::logic_error("Faddeev-LeVerrier trace not divisible");
        c[n - k] = -tr / static_cast<long>(k);
    }
    return IntPoly(std::move(c));
}

}  // namespace coqkit
