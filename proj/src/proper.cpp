#include "coqkit/proper.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace coqkit {

InOut in_out(const Quiver& q, std::size_t j) {
    if (j >= q.size()) throw DomainError("vertex out of range");
    InOut r;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q.at(i, j) > 0) r.ins.push_back(i);
        if (q.at(j, i) > 0) r.outs.push_back(i);
    }
    return r;
}

bool is_proper_vertex(const COQ& coq, std::size_t j) {
    const std::size_t n = coq.quiver.size();
    auto io = in_out(coq.quiver, j);
    for (auto u : io.ins)
        for (auto v : io.outs)
            if (distance(coq.order, u, j) + distance(coq.order, j, v) > n - 1) return false;
    return true;
}

bool is_proper_in_wiggle_class(const COQ& coq, std::size_t j, const std::vector<Cycle>& chordless) {
    const Quiver& q = coq.quiver;
    for (const auto& c : chordless) {
        const std::size_t len = c.length();
        auto it = std::find(c.v.begin(), c.v.end(), j);
        if (it == c.v.end()) continue;
        std::size_t i = static_cast<std::size_t>(it - c.v.begin());
        std::size_t prev = c.v[(i + len - 1) % len], next = c.v[(i + 1) % len];
        bool forward_middle = q.at(prev, j) > 0 && q.at(j, next) > 0;
        bool backward_middle = q.at(j, prev) > 0 && q.at(next, j) > 0;
        if (!forward_middle && !backward_middle) continue;
        auto counts = arrow_counts(q, c);
        long w = winding(coq, c);
        long r = static_cast<long>(counts.forward), l = static_cast<long>(counts.backward);
        if (forward_middle && !(w < r - 1)) return false;
        if (backward_middle && !(w > 1 - l)) return false;
    }
    return true;
}

bool is_proper_in_wiggle_class(const COQ& coq, std::size_t j, std::size_t cap) {
    if (j >= coq.quiver.size()) throw DomainError("vertex out of range");
    return is_proper_in_wiggle_class(coq, j, chordless_cycles(underlying_graph(coq.quiver), cap));
}

std::optional<std::size_t> first_improper_vertex(const COQ& coq, std::size_t cap) {
    auto cycles = chordless_cycles(underlying_graph(coq.quiver), cap);
    for (std::size_t j = 0; j < coq.quiver.size(); ++j)
        if (!is_proper_in_wiggle_class(coq, j, cycles)) return j;
    return std::nullopt;
}

bool is_proper_coq(const COQ& coq, std::size_t cap) { return !first_improper_vertex(coq, cap).has_value(); }

std::optional<COQ> realize_proper_at(const COQ& coq, std::size_t j, std::size_t cap) {
    if (j >= coq.quiver.size()) throw DomainError("vertex out of range");
    if (is_proper_vertex(coq, j)) return coq;
    if (!is_proper_in_wiggle_class(coq, j, cap)) return std::nullopt;
    auto sig = winding_signature(coq);
    OrderingConstraints cons{sig.basis, sig.winds, {}};
    auto io = in_out(coq.quiver, j);
    for (auto u : io.ins)
        for (auto v : io.outs) cons.arcs.push_back({u, j, v});
    auto order = solve_ordering(coq.quiver, cons);
    if (!order) return std::nullopt;
    return COQ{coq.quiver, *order};
}

COQ proper_mutate_at_proper(const COQ& coq, std::size_t j) {
    const std::size_t n = coq.quiver.size();
    if (!is_proper_vertex(coq, j)) throw DomainError("vertex is not proper in this ordering");
    auto io = in_out(coq.quiver, j);
    std::vector<char> out(n, 0);
    for (auto v : io.outs) out[v] = 1;
    const std::size_t start = coq.order.pos(j);
    std::size_t last = n;  // offset of the clockwise-last Out(j) vertex
    for (std::size_t off = 1; off < n; ++off)
        if (out[coq.order.at(start + off)]) last = off;
    std::vector<std::size_t> seq;
    if (last == n) {
        seq = coq.order.seq();
    } else {
        for (std::size_t off = 1; off <= last; ++off) seq.push_back(coq.order.at(start + off));
        seq.push_back(j);
        for (std::size_t off = last + 1; off < n; ++off) seq.push_back(coq.order.at(start + off));
    }
    Quiver mq = mutate(coq.quiver, j);
    return COQ{mq, CyclicOrdering(mq, std::move(seq))};
}

COQ proper_mutate(const COQ& coq, std::size_t j, std::size_t cap) {
    auto realized = realize_proper_at(coq, j, cap);
    if (!realized) throw DomainError("vertex '" + coq.quiver.name(j) + "' is not proper in its wiggle class");
    return proper_mutate_at_proper(*realized, j);
}

std::optional<CyclicOrdering> find_proper_ordering(const Quiver& q, std::size_t cap) {
    const std::size_t n = q.size();
    if (n > 10) throw ResourceError("exhaustive ordering search is limited to 10 vertices");
    if (n == 0) return CyclicOrdering(q, {});
    auto cycles = chordless_cycles(underlying_graph(q), cap);
    std::set<std::vector<long>> seen;
    std::vector<std::size_t> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);
    auto basis = homology_basis(underlying_graph(q));
    do {
        std::vector<std::size_t> seq{0};
        seq.insert(seq.end(), rest.begin(), rest.end());
        COQ coq{q, CyclicOrdering(q, seq)};
        std::vector<long> winds;
        for (const auto& c : basis) winds.push_back(winding(coq, c));
        if (!seen.insert(winds).second) continue;
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) ok = is_proper_in_wiggle_class(coq, j, cycles);
        if (ok) return coq.order;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return std::nullopt;
}

std::optional<CyclicOrdering> candidate_ordering(const Quiver& q, std::size_t cap) {
    auto cycles = chordless_cycles(underlying_graph(q), cap);
    OrderingConstraints cons;
    for (const auto& c : cycles) {
        auto counts = arrow_counts(q, c);
        long target = 0;
        if (counts.backward == 0) target = 1;
        if (counts.forward == 0) target = -1;
        cons.cycles.push_back(c);
        cons.winds.push_back(target);
    }
    return solve_ordering(q, cons);
}

CyclicOrdering ordering_from_coloring(const Quiver& q, const std::vector<int>& colors) {
    const std::size_t n = q.size();
    if (colors.size() != n) throw DomainError("coloring does not cover the quiver");
    for (auto c : colors)
        if (c < -1 || c > 1) throw DomainError("colors must be -1, 0 or 1");
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            if (q.at(u, v) <= 0) continue;
            int a = colors[u], b = colors[v];
            bool ok = (a == -1 && b == 0) || (a == 0 && b == 1) || (a == 1 && b == -1);
            if (!ok) throw DomainError("arrow " + q.name(u) + " -> " + q.name(v) + " violates the coloring rule");
        }
    std::vector<std::size_t> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    std::sort(seq.begin(), seq.end(), [&](std::size_t a, std::size_t b) {
        if (colors[a] != colors[b]) return colors[a] < colors[b];
        return q.name(a) < q.name(b);
    });
    return CyclicOrdering(q, std::move(seq));
}

const char* to_string(TotallyProperVerdict::Status s) {
    switch (s) {
        case TotallyProperVerdict::Status::verified: return "verified-proper-class";
        case TotallyProperVerdict::Status::refuted: return "refuted";
        case TotallyProperVerdict::Status::budget_exceeded: return "budget-exceeded";
    }
    return "unknown";
}

namespace {

struct ClassKey {
    std::vector<Int> matrix;
    std::vector<long> winds;
    friend bool operator<(const ClassKey& a, const ClassKey& b) {
        if (a.matrix != b.matrix) return a.matrix < b.matrix;
        return a.winds < b.winds;
    }
};

ClassKey class_key(const COQ& coq) { return {coq.quiver.b().data(), winding_signature(coq).winds}; }

}  // namespace

TotallyProperVerdict verify_totally_proper(const COQ& coq, const TotallyProperOptions& opts) {
    if (opts.budget == 0) throw DomainError("budget must be positive");
    TotallyProperVerdict verdict;
    struct Node {
        COQ coq;
        std::vector<std::size_t> path;
    };
    std::set<ClassKey> seen;
    std::deque<Node> frontier;
    seen.insert(class_key(coq));
    frontier.push_back({coq, {}});
    while (!frontier.empty()) {
        if (verdict.explored >= opts.budget) {
            verdict.status = TotallyProperVerdict::Status::budget_exceeded;
            return verdict;
        }
        Node node = std::move(frontier.front());
        frontier.pop_front();
        ++verdict.explored;
        const Quiver& q = node.coq.quiver;
        auto cycles = chordless_cycles(underlying_graph(q), opts.cap);
        for (std::size_t j = 0; j < q.size(); ++j)
            if (!is_proper_in_wiggle_class(node.coq, j, cycles)) {
                verdict.status = TotallyProperVerdict::Status::refuted;
                verdict.witness = node.coq;
                verdict.witness_vertex = j;
                verdict.path = node.path;
                return verdict;
            }
        std::vector<std::size_t> targets;
        std::optional<std::size_t> ret = opts.prune_forks ? is_fork(q) : std::nullopt;
        if (ret) {
            targets.push_back(*ret);
        } else {
            targets.resize(q.size());
            std::iota(targets.begin(), targets.end(), 0);
        }
        for (auto j : targets) {
            COQ child = proper_mutate(node.coq, j, opts.cap);
            if (!seen.insert(class_key(child)).second) continue;
            auto path = node.path;
            path.push_back(j);
            frontier.push_back({std::move(child), std::move(path)});
        }
    }
    verdict.status = TotallyProperVerdict::Status::verified;
    return verdict;
}

QuasiCartan quasi_cartan(const UnipotentCompanion& uc) { return {uc.u + uc.u.transpose(), uc.order}; }

bool is_admissible(const QuasiCartan& a, const Quiver& q, std::size_t cap) {
    const std::size_t n = q.size();
    if (a.a.rows() != n || a.order.size() != n) throw DomainError("quasi-Cartan size mismatch");
    std::vector<std::size_t> pos(n);
    for (std::size_t p = 0; p < n; ++p) pos[a.order[p]] = p;
    for (const auto& c : chordless_cycles(underlying_graph(q), cap)) {
        std::size_t positive = 0;
        for (std::size_t i = 0; i < c.length(); ++i) {
            std::size_t x = c.v[i], y = c.v[(i + 1) % c.length()];
            if (a.a(pos[x], pos[y]) > 0) ++positive;
        }
        bool oriented = is_oriented(q, c);
        if ((positive % 2 == 1) != oriented) return false;
    }
    return true;
}

std::optional<Gf2Assignment> admissible_homomorphism(const Quiver& q, std::size_t cap) {
    auto g = underlying_graph(q);
    auto forest = spanning_forest(g);
    const std::size_t m = forest.cotree.size();
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> cotree_index;
    for (std::size_t e = 0; e < m; ++e) {
        auto [u, v] = forest.cotree[e];
        cotree_index[{u, v}] = e;
        cotree_index[{v, u}] = e;
    }
    // rows: cycle coordinates over the cotree edges | required parity
    std::vector<std::vector<char>> rows;
    for (const auto& c : chordless_cycles(g, cap)) {
        std::vector<char> row(m + 1, 0);
        for (std::size_t i = 0; i < c.length(); ++i) {
            auto it = cotree_index.find({c.v[i], c.v[(i + 1) % c.length()]});
            if (it != cotree_index.end()) row[it->second] ^= 1;
        }
        row[m] = is_oriented(q, c) ? 1 : 0;
        rows.push_back(std::move(row));
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p][c]) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i][c])
                for (std::size_t k = c; k <= m; ++k) rows[i][k] ^= rows[r][k];
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][m]) return std::nullopt;
    Gf2Assignment out;
    out.basis = homology_basis(g);
    out.bits.assign(m, 0);
    for (std::size_t i = 0; i < r; ++i) out.bits[pivot_col[i]] = rows[i][m];
    return out;
}

}  // namespace coqkit
