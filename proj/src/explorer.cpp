#include "coqkit/explorer.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace coqkit {

namespace {

constexpr std::size_t candidate_cap = 4000000;

// Twins: non-adjacent vertices with identical neighborhoods; swapping them
// fixes the matrix, so only the smallest unused twin needs to be tried.
std::vector<std::size_t> twin_class(const IntMat& b) {
    const std::size_t n = b.rows();
    std::vector<std::size_t> cls(n);
    for (std::size_t u = 0; u < n; ++u) {
        cls[u] = u;
        for (std::size_t v = 0; v < u; ++v) {
            if (cls[v] != v || b(u, v) != 0) continue;
            bool same = true;
            for (std::size_t x = 0; x < n && same; ++x)
                if (x != u && x != v && b(u, x) != b(v, x)) same = false;
            if (same) {
                cls[u] = v;
                break;
            }
        }
    }
    return cls;
}

// All relabelings giving the minimal lower triangle (one per twin orbit when pruning).
std::vector<std::vector<std::size_t>> minimizing_permutations(const IntMat& b, bool prune_twins) {
    const std::size_t n = b.rows();
    if (n > max_canonical_size)
        throw ResourceError("canonical forms are limited to " + std::to_string(max_canonical_size) + " vertices");
    auto cls = twin_class(b);
    std::vector<std::vector<std::size_t>> cands{{}};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::vector<std::size_t>> next;
        std::vector<Int> best;
        bool have = false;
        for (const auto& p : cands) {
            std::vector<char> used(n, 0);
            for (auto v : p) used[v] = 1;
            std::vector<char> class_tried(n, 0);
            for (std::size_t v = 0; v < n; ++v) {
                if (used[v]) continue;
                if (prune_twins) {
                    if (class_tried[cls[v]]) continue;
                    class_tried[cls[v]] = 1;
                }
                std::vector<Int> row(k);
                for (std::size_t i = 0; i < k; ++i) row[i] = b(v, p[i]);
                if (!have || row < best) {
                    best = std::move(row);
                    have = true;
                    next.clear();
                } else if (row != best) {
                    continue;
                }
                auto q = p;
                q.push_back(v);
                next.push_back(std::move(q));
                if (next.size() > candidate_cap) throw ResourceError("canonical form search too large");
            }
        }
        cands = std::move(next);
    }
    return cands;
}

std::vector<Int> lower_triangle(const IntMat& b, const std::vector<std::size_t>& perm) {
    std::vector<Int> out;
    for (std::size_t i = 1; i < perm.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) out.push_back(b(perm[i], perm[j]));
    return out;
}

Int max_abs_entry(const IntMat& b) {
    Int m = 0;
    for (const auto& x : b.data())
        if (abs(x) > m) m = abs(x);
    return m;
}

}  // namespace

std::vector<std::size_t> canonical_permutation(const Quiver& q) {
    if (q.size() == 0) return {};
    return minimizing_permutations(q.b(), true).front();
}

std::vector<Int> canonical_key(const Quiver& q) { return lower_triangle(q.b(), canonical_permutation(q)); }

Quiver canonical_form(const Quiver& q) { return Quiver::from_matrix(relabel(q, canonical_permutation(q)).b()); }

void validate(const ExplorationLimits& limits) {
    if (limits.max_quivers == 0 || limits.max_depth == 0 || limits.max_entry <= 0)
        throw DomainError("exploration limits must be positive");
}

namespace {

struct Expansion {
    std::size_t label;
    ClassMember child;
};

struct Search {
    const ExplorationLimits& limits;
    std::function<std::vector<Int>(const ClassMember&)> key;
    std::function<std::vector<Expansion>(const ClassMember&)> expand;

    ClassReport run(ClassMember seed) {
        validate(limits);
        ClassReport report;
        report.up_to_relabeling = limits.up_to_relabeling;
        std::map<std::vector<Int>, std::size_t> index;
        std::set<std::pair<std::size_t, std::size_t>> edges;
        index.emplace(key(seed), 0);
        report.members.push_back(std::move(seed));
        std::deque<std::size_t> frontier{0};
        bool entry_note = false;
        while (!frontier.empty()) {
            std::size_t cur = frontier.front();
            frontier.pop_front();
            ++report.explored;
            const std::size_t depth = report.members[cur].depth;
            for (auto& [label, child] : expand(report.members[cur])) {
                (void)label;
                if (max_abs_entry(child.quiver.b()) > limits.max_entry) {
                    report.complete = false;
                    if (!entry_note) report.notes.push_back("entry bound reached");
                    entry_note = true;
                    continue;
                }
                auto k = key(child);
                auto it = index.find(k);
                if (it != index.end()) {
                    if (it->second != cur) edges.insert(std::minmax(cur, it->second));
                    continue;
                }
                if (depth + 1 > limits.max_depth) {
                    report.complete = false;
                    continue;
                }
                if (report.members.size() >= limits.max_quivers) {
                    report.complete = false;
                    report.notes.push_back("size bound reached");
                    report.edges.assign(edges.begin(), edges.end());
                    return report;
                }
                child.depth = depth + 1;
                std::size_t id = report.members.size();
                index.emplace(std::move(k), id);
                edges.insert({cur, id});
                report.members.push_back(std::move(child));
                frontier.push_back(id);
            }
        }
        report.edges.assign(edges.begin(), edges.end());
        return report;
    }
};

ClassMember plain_member(Quiver q) {
    ClassMember m{std::move(q), std::nullopt, 0, std::nullopt, 0, 0, std::nullopt, std::nullopt};
    m.fork_return = is_fork(m.quiver);
    m.det = det_b(m.quiver);
    m.rank = rank_b(m.quiver);
    return m;
}

ClassMember coq_member(COQ coq) {
    ClassMember m = plain_member(coq.quiver);
    m.alexander = alexander_polynomial(coq.quiver, coq.order.seq());
    m.markov = markov_invariant(coq.quiver, coq.order.seq());
    m.order = std::move(coq.order);
    return m;
}

std::vector<Int> matrix_key(const ClassMember& m) { return m.quiver.b().data(); }

Quiver normalize(const Quiver& q, const ExplorationLimits& limits) {
    return limits.up_to_relabeling ? canonical_form(q) : q;
}

// Canonical relabeling of a COQ: the canonical matrix, and among all
// relabelings achieving it the one with the smallest basis windings.
COQ canonical_coq(const COQ& coq) {
    const std::size_t n = coq.quiver.size();
    auto perms = minimizing_permutations(coq.quiver.b(), false);
    Quiver cq = Quiver::from_matrix(relabel(coq.quiver, perms.front()).b());
    auto basis = homology_basis(underlying_graph(cq));
    std::optional<CyclicOrdering> best;
    std::vector<long> best_winds;
    for (const auto& p : perms) {
        std::vector<std::size_t> inv(n);
        for (std::size_t i = 0; i < n; ++i) inv[p[i]] = i;
        std::vector<std::size_t> seq;
        for (auto v : coq.order.seq()) seq.push_back(inv[v]);
        CyclicOrdering ord(cq, seq);
        std::vector<long> winds;
        for (const auto& c : basis) winds.push_back(winding(cq, ord, c));
        if (!best || winds < best_winds) {
            best = ord;
            best_winds = std::move(winds);
        }
    }
    return COQ{cq, *best};
}

}  // namespace

ClassReport mutation_class(const Quiver& q, const ExplorationLimits& limits) {
    Search s{limits, matrix_key, [&](const ClassMember& m) {
                 std::vector<Expansion> out;
                 for (std::size_t k = 0; k < m.quiver.size(); ++k)
                     out.push_back({k, plain_member(normalize(mutate(m.quiver, k), limits))});
                 return out;
             }};
    return s.run(plain_member(normalize(q, limits)));
}

ClassReport forkless_part(const Quiver& q, const ExplorationLimits& limits) {
    Search s{limits, matrix_key, [&](const ClassMember& m) {
                 std::vector<Expansion> out;
                 for (std::size_t k = 0; k < m.quiver.size(); ++k) {
                     if (m.fork_return && *m.fork_return != k) continue;
                     out.push_back({k, plain_member(normalize(mutate(m.quiver, k), limits))});
                 }
                 return out;
             }};
    return s.run(plain_member(normalize(q, limits)));
}

ClassReport proper_mutation_class(const COQ& coq, const ExplorationLimits& limits, std::size_t cap) {
    auto norm = [&](const COQ& c) { return limits.up_to_relabeling ? canonical_coq(c) : c; };
    auto key = [](const ClassMember& m) {
        auto k = m.quiver.b().data();
        for (auto w : winding_signature(COQ{m.quiver, *m.order}).winds) k.push_back(Int(w));
        return k;
    };
    Search s{limits, key, [&](const ClassMember& m) {
                 std::vector<Expansion> out;
                 COQ cur{m.quiver, *m.order};
                 auto cycles = chordless_cycles(underlying_graph(cur.quiver), cap);
                 for (std::size_t j = 0; j < cur.quiver.size(); ++j) {
                     if (!is_proper_in_wiggle_class(cur, j, cycles)) continue;
                     out.push_back({j, coq_member(norm(proper_mutate(cur, j, cap)))});
                 }
                 return out;
             }};
    return s.run(coq_member(norm(coq)));
}

bool class_contains(const ClassReport& report, const Quiver& q) {
    if (report.up_to_relabeling) {
        Quiver cq = canonical_form(q);
        for (const auto& m : report.members)
            if (m.quiver.b() == cq.b()) return true;
        return false;
    }
    for (const auto& m : report.members)
        if (m.quiver.b() == q.b()) return true;
    return false;
}

std::string to_dot(const ClassReport& report) {
    std::ostringstream out;
    out << "graph exchange {\n";
    for (std::size_t i = 0; i < report.members.size(); ++i) {
        const auto& m = report.members[i];
        out << "  n" << i << " [label=\"" << i << " d=" << m.depth;
        if (m.fork_return) out << " fork@" << m.quiver.name(*m.fork_return);
        out << "\"];\n";
    }
    for (auto [a, b] : report.edges) out << "  n" << a << " -- n" << b << ";\n";
    out << "}\n";
    return out.str();
}

Fingerprint fingerprint(const Quiver& q, const std::vector<std::size_t>& order, const std::vector<std::size_t>& ks) {
    auto uc = unipotent_companion(q, order);
    Fingerprint f;
    f.alexander = alexander_polynomial(uc.u);
    f.markov = markov_invariant(uc.u);
    f.det = det_b(q);
    f.gcds = gcd_multiset(uc.u);
    for (auto k : ks) f.lattices.push_back(alexander_lattice(uc.u, k));
    f.frobenius = frobenius_form(cosquare(uc.u));
    return f;
}

CollisionReport collision_scan(const std::vector<COQ>& family, const std::vector<std::size_t>& ks) {
    CollisionReport r;
    for (const auto& c : family) r.fingerprints.push_back(fingerprint(c.quiver, c.order.seq(), ks));
    std::vector<char> grouped(family.size(), 0);
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (grouped[i]) continue;
        CollisionGroup g{r.fingerprints[i].alexander, {i}, {}};
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (!grouped[j] && r.fingerprints[j].alexander == g.alexander) {
                g.members.push_back(j);
                grouped[j] = 1;
            }
        if (g.members.size() < 2) continue;
        std::vector<char> done(g.members.size(), 0);
        for (std::size_t a = 0; a < g.members.size(); ++a) {
            if (done[a]) continue;
            std::vector<std::size_t> same{g.members[a]};
            for (std::size_t b = a + 1; b < g.members.size(); ++b)
                if (!done[b] && r.fingerprints[g.members[a]] == r.fingerprints[g.members[b]]) {
                    same.push_back(g.members[b]);
                    done[b] = 1;
                }
            if (same.size() >= 2) g.unresolved.push_back(std::move(same));
        }
        r.groups.push_back(std::move(g));
    }
    return r;
}

}  // namespace coqkit
