#include "coqkit/braid.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace coqkit {

BraidWord parse_braid_word(const std::string& text) {
    BraidWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 2) throw ParseError("bad braid generator '" + tok + "'");
        GenKind kind;
        switch (tok[0]) {
            case 's': kind = GenKind::sigma; break;
            case 'S': kind = GenKind::sigma_inverse; break;
            case 'r': kind = GenKind::rho; break;
            default: throw ParseError("bad braid generator '" + tok + "'");
        }
        std::size_t idx = 0;
        for (std::size_t i = 1; i < tok.size(); ++i) {
            if (tok[i] < '0' || tok[i] > '9') throw ParseError("bad braid generator '" + tok + "'");
            idx = idx * 10 + static_cast<std::size_t>(tok[i] - '0');
            if (idx > 1000000) throw ParseError("braid index too large");
        }
        if (idx == 0) throw ParseError("braid indices are 1-based");
        w.push_back({kind, idx});
    }
    return w;
}

std::string to_string(const BraidWord& w) {
    std::string out;
    for (const auto& g : w) {
        if (!out.empty()) out += ' ';
        out += g.kind == GenKind::sigma ? 's' : g.kind == GenKind::sigma_inverse ? 'S' : 'r';
        out += std::to_string(g.index);
    }
    return out;
}

void check_word(const BraidWord& w, std::size_t n) {
    for (const auto& g : w) {
        bool ok = g.kind == GenKind::rho ? (g.index >= 1 && g.index <= n) : (g.index >= 1 && g.index + 1 <= n);
        if (!ok) throw DomainError("braid generator " + to_string(BraidWord{g}) + " out of range for n = " + std::to_string(n));
    }
}

namespace {

IntMat swap_matrix(std::size_t n, std::size_t a) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[a], perm[a + 1]);
    return perm_matrix(perm);
}

}  // namespace

MatrixAction act_sigma(const IntMat& u, std::size_t k) {
    const std::size_t n = u.rows();
    if (k < 1 || k >= n) throw DomainError("sigma index out of range");
    const std::size_t a = k - 1;
    IntMat e = IntMat::identity(n);
    e(a + 1, a) = -u(a, a + 1);
    IntMat g = swap_matrix(n, a) * e;
    return {g * u * g.transpose(), g};
}

MatrixAction act_sigma_inverse(const IntMat& u, std::size_t k) {
    const std::size_t n = u.rows();
    if (k < 1 || k >= n) throw DomainError("sigma index out of range");
    const std::size_t a = k - 1;
    IntMat e = IntMat::identity(n);
    e(a, a + 1) = -u(a, a + 1);
    IntMat g = swap_matrix(n, a) * e;
    return {g * u * g.transpose(), g};
}

MatrixAction act_rho(const IntMat& u, std::size_t i) {
    const std::size_t n = u.rows();
    if (i < 1 || i > n) throw DomainError("rho index out of range");
    IntMat j = IntMat::identity(n);
    j(i - 1, i - 1) = -1;
    return {j * u * j, j};
}

MatrixAction act_generator(const IntMat& u, const BraidGenerator& gen) {
    switch (gen.kind) {
        case GenKind::sigma: return act_sigma(u, gen.index);
        case GenKind::sigma_inverse: return act_sigma_inverse(u, gen.index);
        case GenKind::rho: return act_rho(u, gen.index);
    }
    throw std::logic_error("unknown generator");
}

MatrixAction act_word(const IntMat& u, const BraidWord& w) {
    check_word(w, u.rows());
    MatrixAction acc{u, IntMat::identity(u.rows())};
    for (const auto& gen : w) {
        auto step = act_generator(acc.u, gen);
        acc.u = step.u;
        acc.g = step.g * acc.g;
    }
    return acc;
}

LoqAction act_word(const LinearlyOrderedQuiver& loq, const BraidWord& w) {
    const std::size_t n = loq.quiver.size();
    auto uc = unipotent_companion(loq.quiver, loq.order);
    check_word(w, n);
    std::vector<std::size_t> order = loq.order;
    MatrixAction acc{uc.u, IntMat::identity(n)};
    for (const auto& gen : w) {
        auto step = act_generator(acc.u, gen);
        acc.u = step.u;
        acc.g = step.g * acc.g;
        if (gen.kind != GenKind::rho) std::swap(order[gen.index - 1], order[gen.index]);
    }
    IntMat bpos = exchange_from_unipotent(acc.u);
    IntMat b(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) b(order[x], order[y]) = bpos(x, y);
    return {LinearlyOrderedQuiver{Quiver(loq.quiver.vertices(), b), order}, acc.g};
}

BraidWord mutation_word(std::size_t k, std::size_t n) {
    if (k < 1 || k > n) throw DomainError("mutation position out of range");
    BraidWord w;
    for (std::size_t i = k - 1; i >= 1; --i) w.push_back({GenKind::sigma_inverse, i});
    w.push_back({GenKind::rho, 1});
    return w;
}

BraidWord cyclic_shift_word(std::size_t n) {
    BraidWord w;
    for (std::size_t i = 1; i < n; ++i) w.push_back({GenKind::sigma, i});
    return w;
}

std::vector<LinearlyOrderedQuiver> reversal_orbit(const LinearlyOrderedQuiver& loq) {
    const std::size_t n = loq.quiver.size();
    if (n > 24) throw ResourceError("reversal orbit too large");
    std::vector<LinearlyOrderedQuiver> out;
    std::set<std::vector<Int>> seen;
    const std::size_t subsets = n == 0 ? 1 : (std::size_t{1} << (n - 1));
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<char> flip(n, 0);
        for (std::size_t p = 1; p < n; ++p) flip[p] = (mask >> (p - 1)) & 1;
        const IntMat& b = loq.quiver.b();
        IntMat nb(n);
        std::vector<char> vflip(n, 0);
        for (std::size_t p = 0; p < n; ++p) vflip[loq.order[p]] = flip[p];
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) nb(x, y) = vflip[x] != vflip[y] ? Int(-b(x, y)) : b(x, y);
        if (!seen.insert(nb.data()).second) continue;
        out.push_back({Quiver(loq.quiver.vertices(), nb), loq.order});
    }
    return out;
}

}  // namespace coqkit
