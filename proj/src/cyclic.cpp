#include "coqkit/cyclic.hpp"

#include "coqkit/lp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace coqkit {

namespace {

std::vector<std::size_t> name_rank(const Quiver& q) {
    std::vector<std::size_t> idx(q.size()), rank(q.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return q.name(a) < q.name(b); });
    for (std::size_t k = 0; k < idx.size(); ++k) rank[idx[k]] = k;
    return rank;
}

constexpr std::size_t no_parent = SpanningForest::none;

Rat mod_n(const Rat& x, long n) {
    Int q;
    Int num = x.get_num(), den = x.get_den() * n;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Rat r = x - Rat(q * n);
    r.canonicalize();
    return r;
}

}  // namespace

CyclicOrdering::CyclicOrdering(const Quiver& q, std::vector<std::size_t> seq) : seq_(std::move(seq)) {
    const std::size_t n = q.size();
    if (seq_.size() != n) throw DomainError("ordering does not cover every vertex");
    pos_.assign(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (seq_[k] >= n || pos_[seq_[k]] != n) throw DomainError("ordering repeats or misses a vertex");
        pos_[seq_[k]] = k;
    }
    if (n == 0) return;
    auto rank = name_rank(q);
    auto first = std::min_element(seq_.begin(), seq_.end(),
                                  [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
    std::rotate(seq_.begin(), first, seq_.end());
    for (std::size_t k = 0; k < n; ++k) pos_[seq_[k]] = k;
}

CyclicOrdering CyclicOrdering::from_names(const Quiver& q, const std::vector<std::string>& names) {
    std::vector<std::size_t> seq;
    for (const auto& s : names) seq.push_back(q.index(s));
    return CyclicOrdering(q, std::move(seq));
}

CyclicOrdering CyclicOrdering::standard(const Quiver& q) {
    std::vector<std::size_t> seq(q.size());
    std::iota(seq.begin(), seq.end(), 0);
    return CyclicOrdering(q, std::move(seq));
}

std::vector<std::string> CyclicOrdering::names(const Quiver& q) const {
    std::vector<std::string> out;
    for (auto v : seq_) out.push_back(q.name(v));
    return out;
}

std::size_t distance(const CyclicOrdering& s, std::size_t a, std::size_t b) {
    const std::size_t n = s.size();
    return (s.pos(b) + n - s.pos(a)) % n;
}

long winding(const Quiver& q, const CyclicOrdering& s, const Cycle& c) {
    const long n = static_cast<long>(s.size());
    long total = 0;
    for (std::size_t i = 0; i < c.length(); ++i) {
        std::size_t a = c.v[i], b = c.v[(i + 1) % c.length()];
        if (q.at(a, b) == 0) throw DomainError("cycle uses a non-edge");
        total += static_cast<long>(distance(s, a, b));
    }
    if (total % n != 0) throw std::logic_error("non-integral winding number");
    return total / n - static_cast<long>(arrow_counts(q, c).backward);
}

long winding(const COQ& coq, const Cycle& c) { return winding(coq.quiver, coq.order, c); }

bool is_wiggle(const COQ& coq, std::size_t u, std::size_t v) {
    const std::size_t n = coq.order.size();
    if (u >= n || v >= n || u == v || n < 2) return false;
    if (coq.quiver.at(u, v) != 0) return false;
    std::size_t d = distance(coq.order, u, v);
    return d == 1 || d == n - 1;
}

CyclicOrdering swap_adjacent(const Quiver& q, const CyclicOrdering& s, std::size_t u, std::size_t v) {
    std::vector<std::size_t> seq = s.seq();
    std::swap(seq[s.pos(u)], seq[s.pos(v)]);
    return CyclicOrdering(q, std::move(seq));
}

COQ apply_wiggle(const COQ& coq, std::size_t u, std::size_t v) {
    if (!is_wiggle(coq, u, v)) throw DomainError("not a valid wiggle");
    return COQ{coq.quiver, swap_adjacent(coq.quiver, coq.order, u, v)};
}

WindingSignature winding_signature(const COQ& coq) {
    WindingSignature sig;
    sig.basis = homology_basis(underlying_graph(coq.quiver));
    for (const auto& c : sig.basis) sig.winds.push_back(winding(coq, c));
    return sig;
}

bool wiggle_equivalent(const Quiver& q, const CyclicOrdering& a, const CyclicOrdering& b) {
    if (a.size() != q.size() || b.size() != q.size()) throw DomainError("ordering does not match quiver");
    for (const auto& c : homology_basis(underlying_graph(q)))
        if (winding(q, a, c) != winding(q, b, c)) return false;
    return true;
}

std::optional<CyclicOrdering> solve_ordering(const Quiver& q, const OrderingConstraints& cons) {
    const std::size_t n = q.size();
    if (cons.cycles.size() != cons.winds.size()) throw DomainError("cycle and target counts differ");
    if (n == 0) return CyclicOrdering(q, {});
    if (cons.cycles.empty() && cons.arcs.empty()) return CyclicOrdering::standard(q);

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (q.at(u, v) != 0) edge.emplace(std::make_pair(u, v), edge.size());
    const std::size_t m = edge.size();
    const Rat nn(static_cast<long>(n));

    LinearSystem sys;
    sys.vars = m;
    sys.lower.assign(m, Rat(1));
    sys.upper.assign(m, nn - 1);
    // theta(a,b) as coefficient vector plus constant
    auto add_theta = [&](LinearSystem::Row& row, std::size_t a, std::size_t b) {
        if (q.at(a, b) == 0) throw DomainError("constraint uses a non-edge");
        if (a < b) {
            row.coef[edge.at({a, b})] += 1;
        } else {
            row.coef[edge.at({b, a})] -= 1;
            row.rhs -= nn;
        }
    };
    for (std::size_t i = 0; i < cons.cycles.size(); ++i) {
        const Cycle& c = cons.cycles[i];
        LinearSystem::Row row{std::vector<Rat>(m), Rat(0)};
        for (std::size_t k = 0; k < c.length(); ++k) add_theta(row, c.v[k], c.v[(k + 1) % c.length()]);
        Rat lw = static_cast<long>(arrow_counts(q, c).backward) + cons.winds[i];
        row.rhs += nn * lw;
        sys.eq.push_back(std::move(row));
    }
    for (const auto& arc : cons.arcs) {
        LinearSystem::Row row{std::vector<Rat>(m), Rat(0)};
        add_theta(row, arc[0], arc[1]);
        add_theta(row, arc[1], arc[2]);
        row.rhs += nn - 1;
        sys.le.push_back(std::move(row));
    }
    auto x = feasible_point(sys);
    if (!x) return std::nullopt;

    auto theta = [&](std::size_t a, std::size_t b) -> Rat {
        return a < b ? (*x)[edge.at({a, b})] : nn - (*x)[edge.at({b, a})];
    };
    auto g = underlying_graph(q);
    auto forest = spanning_forest(g);
    std::vector<Rat> pot(n);
    for (std::size_t v : forest.bfs)
        if (forest.parent[v] != no_parent) pot[v] = mod_n(pot[forest.parent[v]] + theta(forest.parent[v], v), n);
    std::vector<std::size_t> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    std::sort(seq.begin(), seq.end(), [&](std::size_t a, std::size_t b) {
        if (pot[a] != pot[b]) return pot[a] < pot[b];
        return g.rank[a] < g.rank[b];
    });
    CyclicOrdering out(q, std::move(seq));
    for (std::size_t i = 0; i < cons.cycles.size(); ++i)
        if (winding(q, out, cons.cycles[i]) != cons.winds[i])
            throw std::logic_error("ordering from potentials misses a winding target");
    for (const auto& arc : cons.arcs)
        if (distance(out, arc[0], arc[1]) + distance(out, arc[1], arc[2]) > n - 1)
            throw std::logic_error("ordering from potentials violates an arc constraint");
    return out;
}

std::optional<CyclicOrdering> construct_ordering(const Quiver& q, const WindingSignature& targets) {
    if (targets.basis.size() != targets.winds.size()) throw DomainError("signature lengths differ");
    auto g = underlying_graph(q);
    const std::size_t betti = g.edge_count() + g.components() - g.size();
    // cycle-space rank of the target cycles
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge;
    for (std::size_t u = 0; u < q.size(); ++u)
        for (std::size_t v = u + 1; v < q.size(); ++v)
            if (g.adjacent(u, v)) edge.emplace(std::make_pair(u, v), edge.size());
    IntMat inc(targets.basis.size(), edge.size());
    for (std::size_t i = 0; i < targets.basis.size(); ++i) {
        const Cycle& c = targets.basis[i];
        for (std::size_t k = 0; k < c.length(); ++k) {
            std::size_t a = c.v[k], b = c.v[(k + 1) % c.length()];
            if (a >= q.size() || b >= q.size() || !g.adjacent(a, b)) throw DomainError("target cycle uses a non-edge");
            if (a < b)
                inc(i, edge.at({a, b})) += 1;
            else
                inc(i, edge.at({b, a})) -= 1;
        }
    }
    if (rank(inc) != betti) throw DomainError("target cycles do not span the cycle space");
    return solve_ordering(q, OrderingConstraints{targets.basis, targets.winds, {}});
}

std::vector<Wiggle> wiggle_path(const Quiver& q, const CyclicOrdering& from, const CyclicOrdering& to) {
    if (!wiggle_equivalent(q, from, to)) throw DomainError("orderings are not wiggle equivalent");
    const std::size_t n = q.size();
    std::vector<Wiggle> out;
    if (from == to) return out;
    const long nl = static_cast<long>(n);
    auto g = underlying_graph(q);
    auto forest = spanning_forest(g);
    std::vector<long> start(n), end(n);
    for (std::size_t v : forest.bfs) {
        std::size_t p = forest.parent[v];
        if (p == no_parent) {
            start[v] = static_cast<long>(from.pos(v));
            end[v] = static_cast<long>(to.pos(v));
        } else {
            start[v] = start[p] + static_cast<long>(distance(from, p, v));
            end[v] = end[p] + static_cast<long>(distance(to, p, v));
        }
    }
    // collision times in (0,1)
    std::vector<Rat> times;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            long a = start[u] - start[v];
            long d = (end[u] - end[v]) - a;
            if (d == 0) continue;
            long lo = std::min(a, a + d), hi = std::max(a, a + d);
            // multiples of n strictly inside (lo, hi)
            long m = lo >= 0 ? lo / nl + 1 : -((-lo) / nl);
            if (m * nl <= lo) ++m;
            for (; m * nl < hi; ++m) times.push_back(Rat(m * nl - a, d));
        }
    for (auto& t : times) t.canonicalize();
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());

    std::vector<std::size_t> arr = from.seq();
    std::vector<std::size_t> where(n);
    auto reindex = [&] {
        for (std::size_t k = 0; k < n; ++k) where[arr[k]] = k;
    };
    reindex();
    for (const Rat& t : times) {
        std::map<Rat, std::vector<std::size_t>> groups;
        for (std::size_t v = 0; v < n; ++v) {
            Rat pos = (1 - t) * start[v] + t * end[v];
            groups[mod_n(pos, nl)].push_back(v);
        }
        std::vector<std::vector<std::size_t>> batch;
        for (auto& [x, members] : groups) {
            if (members.size() < 2) continue;
            std::sort(members.begin(), members.end(),
                      [&](std::size_t a, std::size_t b) { return g.rank[a] < g.rank[b]; });
            batch.push_back(members);
        }
        for (const auto& members : batch) {
            std::vector<char> in(n, 0);
            for (auto v : members) in[v] = 1;
            std::size_t s = n;
            for (std::size_t k = 0; k < n; ++k)
                if (in[arr[k]] && !in[arr[(k + n - 1) % n]]) {
                    s = k;
                    break;
                }
            const std::size_t len = members.size();
            if (s == n) throw std::logic_error("colliding vertices fill the whole circle");
            for (std::size_t k = 0; k < len; ++k)
                if (!in[arr[(s + k) % n]]) throw std::logic_error("colliding vertices are not contiguous");
            for (std::size_t i = 0; i < len; ++i)
                for (std::size_t j = 0; j + 1 + i < len; ++j) {
                    std::size_t p = (s + j) % n, p2 = (s + j + 1) % n;
                    if (q.at(arr[p], arr[p2]) != 0) throw std::logic_error("collision between adjacent vertices");
                    out.emplace_back(arr[p], arr[p2]);
                    std::swap(arr[p], arr[p2]);
                }
            reindex();
        }
    }
    if (!(CyclicOrdering(q, arr) == to)) throw std::logic_error("wiggle path does not reach the target ordering");
    return out;
}

COQ opposite(const COQ& coq) {
    std::vector<std::size_t> seq(coq.order.seq().rbegin(), coq.order.seq().rend());
    return COQ{opposite_arrows(coq.quiver), CyclicOrdering(coq.quiver, std::move(seq))};
}

}  // namespace coqkit
