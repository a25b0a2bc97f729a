#include "coqkit/quiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

namespace coqkit {

Quiver::Quiver(std::vector<std::string> vertices, IntMat b) : names_(std::move(vertices)), b_(std::move(b)) {
    const std::size_t n = names_.size();
    if (b_.rows() != n || b_.cols() != n) throw DomainError("exchange matrix size does not match vertex count");
    for (std::size_t i = 0; i < n; ++i) {
        if (!lookup_.emplace(names_[i], i).second) throw DomainError("duplicate vertex '" + names_[i] + "'");
        if (b_(i, i) != 0) throw DomainError("loop at vertex '" + names_[i] + "'");
        for (std::size_t j = i + 1; j < n; ++j)
            if (b_(i, j) != -b_(j, i)) throw DomainError("exchange matrix is not skew-symmetric");
    }
}

Quiver Quiver::from_arrows(std::vector<std::string> vertices, const std::vector<Arrow>& arrows) {
    const std::size_t n = vertices.size();
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
        if (!idx.emplace(vertices[i], i).second) throw DomainError("duplicate vertex '" + vertices[i] + "'");
    IntMat b(n);
    std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
    for (const auto& a : arrows) {
        auto f = idx.find(a.from), t = idx.find(a.to);
        if (f == idx.end() || t == idx.end()) throw DomainError("arrow uses unknown vertex");
        std::size_t i = f->second, j = t->second;
        if (i == j) throw DomainError("loop at vertex '" + a.from + "'");
        if (a.mult <= 0) throw DomainError("arrow multiplicity must be positive");
        if (seen[i][j]) throw DomainError("duplicate arrow between '" + a.from + "' and '" + a.to + "'");
        seen[i][j] = seen[j][i] = 1;
        b(i, j) = a.mult;
        b(j, i) = -a.mult;
    }
    return Quiver(std::move(vertices), std::move(b));
}

Quiver Quiver::from_matrix(const IntMat& b) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < b.rows(); ++i) names.push_back(std::to_string(i + 1));
    return Quiver(std::move(names), b);
}

std::size_t Quiver::index(const std::string& v) const {
    auto it = lookup_.find(v);
    if (it == lookup_.end()) throw DomainError("unknown vertex '" + v + "'");
    return it->second;
}

std::vector<Arrow> Quiver::arrows() const {
    std::vector<Arrow> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (b_(i, j) > 0) out.push_back({names_[i], names_[j], b_(i, j)});
    return out;
}

IntMat mutate_matrix(const IntMat& b, std::size_t j) {
    const std::size_t n = b.rows();
    if (j >= n) throw DomainError("mutation index out of range");
    IntMat r = b;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (i == j || k == j) {
                r(i, k) = -b(i, k);
            } else if (b(i, j) > 0 && b(j, k) > 0) {
                r(i, k) += b(i, j) * b(j, k);
            } else if (b(i, j) < 0 && b(j, k) < 0) {
                r(i, k) -= b(i, j) * b(j, k);
            }
        }
    }
    return r;
}

Quiver mutate(const Quiver& q, std::size_t j) {
    if (j >= q.size()) throw DomainError("mutation index out of range");
    return Quiver(q.vertices(), mutate_matrix(q.b(), j));
}

Quiver mutate(const Quiver& q, const std::string& j) { return mutate(q, q.index(j)); }

Quiver opposite_arrows(const Quiver& q) { return Quiver(q.vertices(), -q.b()); }

Quiver subquiver_by_index(const Quiver& q, const std::vector<std::size_t>& keep) {
    std::vector<std::string> names;
    IntMat b(keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a) {
        names.push_back(q.name(keep[a]));
        for (std::size_t c = 0; c < keep.size(); ++c) b(a, c) = q.at(keep[a], keep[c]);
    }
    return Quiver(std::move(names), std::move(b));
}

Quiver subquiver(const Quiver& q, const std::vector<std::string>& keep) {
    std::vector<char> in(q.size(), 0);
    for (const auto& v : keep) in[q.index(v)] = 1;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < q.size(); ++i)
        if (in[i]) idx.push_back(i);
    return subquiver_by_index(q, idx);
}

Quiver relabel(const Quiver& q, const std::vector<std::size_t>& perm) {
    if (perm.size() != q.size()) throw DomainError("permutation size mismatch");
    return subquiver_by_index(q, perm);
}

std::size_t SimpleGraph::edge_count() const {
    std::size_t e = 0;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j) e += adj[i][j] ? 1 : 0;
    return e;
}

std::size_t SimpleGraph::components() const {
    std::vector<char> seen(size(), 0);
    std::size_t c = 0;
    for (std::size_t s = 0; s < size(); ++s) {
        if (seen[s]) continue;
        ++c;
        std::vector<std::size_t> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < size(); ++v)
                if (adj[u][v] && !seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
    }
    return c;
}

std::vector<std::size_t> SimpleGraph::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < size(); ++k)
        if (adj[v][order[k]]) out.push_back(order[k]);
    return out;
}

SimpleGraph underlying_graph(const Quiver& q) {
    SimpleGraph g;
    const std::size_t n = q.size();
    g.vertices = q.vertices();
    g.adj.assign(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.adj[i][j] = q.at(i, j) != 0;
    g.order.resize(n);
    std::iota(g.order.begin(), g.order.end(), 0);
    std::sort(g.order.begin(), g.order.end(),
              [&](std::size_t a, std::size_t b) { return g.vertices[a] < g.vertices[b]; });
    g.rank.resize(n);
    for (std::size_t k = 0; k < n; ++k) g.rank[g.order[k]] = k;
    return g;
}

Cycle canonical_cycle(std::vector<std::size_t> v, const SimpleGraph& g) {
    auto first = std::min_element(v.begin(), v.end(),
                                  [&](std::size_t a, std::size_t b) { return g.rank[a] < g.rank[b]; });
    std::rotate(v.begin(), first, v.end());
    return Cycle{std::move(v)};
}

Cycle reversed(const Cycle& c, const SimpleGraph& g) {
    std::vector<std::size_t> v(c.v.rbegin(), c.v.rend());
    return canonical_cycle(std::move(v), g);
}

std::vector<std::string> cycle_names(const Cycle& c, const SimpleGraph& g) {
    std::vector<std::string> out;
    for (auto v : c.v) out.push_back(g.vertices[v]);
    return out;
}

std::size_t cycle_cap_from_env() {
    if (const char* s = std::getenv("COQKIT_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return default_cycle_cap;
}

namespace {

struct ChordlessSearch {
    const SimpleGraph& g;
    std::size_t cap;
    std::size_t start = 0;
    std::vector<std::size_t> path;
    std::vector<char> on_path;
    std::vector<Cycle> found;

    void extend() {
        const std::size_t tail = path.back();
        for (std::size_t v : g.neighbors(tail)) {
            if (g.rank[v] <= g.rank[start] || on_path[v]) continue;
            bool chord = false;
            for (std::size_t k = 1; k + 1 < path.size(); ++k)
                if (g.adjacent(v, path[k])) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            if (g.adjacent(v, start) && path.size() >= 2) {
                if (g.rank[path[1]] < g.rank[v]) {
                    std::vector<std::size_t> cyc = path;
                    cyc.push_back(v);
                    found.push_back(Cycle{std::move(cyc)});
                    if (found.size() > cap)
                        throw ResourceError("chordless cycle count exceeds cap " + std::to_string(cap));
                }
                continue;
            }
            if (g.adjacent(v, start)) continue;
            path.push_back(v);
            on_path[v] = 1;
            extend();
            on_path[v] = 0;
            path.pop_back();
        }
    }
};

}  // namespace

std::vector<Cycle> chordless_cycles(const SimpleGraph& g, std::size_t cap) {
    if (cap == 0) throw DomainError("cycle cap must be positive");
    ChordlessSearch s{g, cap, 0, {}, {}, {}};
    s.on_path.assign(g.size(), 0);
    for (std::size_t k = 0; k < g.size(); ++k) {
        s.start = g.order[k];
        s.path = {s.start};
        s.on_path[s.start] = 1;
        for (std::size_t v : g.neighbors(s.start)) {
            if (g.rank[v] <= k) continue;
            s.path.push_back(v);
            s.on_path[v] = 1;
            s.extend();
            s.on_path[v] = 0;
            s.path.pop_back();
        }
        s.on_path[s.start] = 0;
    }
    auto key = [&](const Cycle& c) {
        std::vector<std::size_t> r;
        for (auto v : c.v) r.push_back(g.rank[v]);
        return r;
    };
    std::stable_sort(s.found.begin(), s.found.end(), [&](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return key(a) < key(b);
    });
    return s.found;
}

SpanningForest spanning_forest(const SimpleGraph& g) {
    const std::size_t n = g.size();
    SpanningForest f;
    f.parent.assign(n, SpanningForest::none);
    f.depth.assign(n, 0);
    std::vector<char> seen(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t root = g.order[k];
        if (seen[root]) continue;
        seen[root] = 1;
        f.roots.push_back(root);
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            f.bfs.push_back(u);
            for (std::size_t v : g.neighbors(u)) {
                if (seen[v]) continue;
                seen[v] = 1;
                f.parent[v] = u;
                f.depth[v] = f.depth[u] + 1;
                queue.push_back(v);
            }
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = a + 1; c < n; ++c) {
            std::size_t u = g.order[a], v = g.order[c];
            if (g.adjacent(u, v) && !f.is_tree_edge(u, v)) f.cotree.emplace_back(u, v);
        }
    return f;
}

std::vector<Cycle> homology_basis(const SimpleGraph& g) {
    auto f = spanning_forest(g);
    std::vector<Cycle> basis;
    for (auto [u, v] : f.cotree) {
        std::vector<std::size_t> up, down;
        std::size_t x = u, y = v;
        while (f.depth[x] > f.depth[y]) up.push_back(x), x = f.parent[x];
        while (f.depth[y] > f.depth[x]) down.push_back(y), y = f.parent[y];
        while (x != y) {
            up.push_back(x), x = f.parent[x];
            down.push_back(y), y = f.parent[y];
        }
        up.push_back(x);
        up.insert(up.end(), down.rbegin(), down.rend());
        basis.push_back(canonical_cycle(std::move(up), g));
    }
    return basis;
}

ArrowCounts arrow_counts(const Quiver& q, const Cycle& c) {
    ArrowCounts out;
    for (std::size_t i = 0; i < c.length(); ++i) {
        std::size_t a = c.v[i], b = c.v[(i + 1) % c.length()];
        if (q.at(a, b) > 0)
            ++out.forward;
        else if (q.at(a, b) < 0)
            ++out.backward;
        else
            throw DomainError("cycle uses a non-edge");
    }
    return out;
}

bool is_oriented(const Quiver& q, const Cycle& c) {
    auto ct = arrow_counts(q, c);
    return ct.forward == 0 || ct.backward == 0;
}

bool is_acyclic(const Quiver& q) {
    const std::size_t n = q.size();
    std::vector<std::size_t> indeg(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (q.at(i, j) > 0) ++indeg[j];
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) ready.push_back(i);
    std::size_t done = 0;
    while (!ready.empty()) {
        std::size_t u = ready.back();
        ready.pop_back();
        ++done;
        for (std::size_t j = 0; j < n; ++j)
            if (q.at(u, j) > 0 && --indeg[j] == 0) ready.push_back(j);
    }
    return done == n;
}

bool is_complete(const Quiver& q) {
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j)
            if (q.at(i, j) == 0) return false;
    return true;
}

bool is_abundant(const Quiver& q) {
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j)
            if (abs(q.at(i, j)) < 2) return false;
    return true;
}

bool is_tree(const Quiver& q) {
    if (q.size() == 0) return false;
    auto g = underlying_graph(q);
    return g.components() == 1 && g.edge_count() + 1 == q.size();
}

namespace {

bool vortex_on(const Quiver& q, const std::array<std::size_t, 4>& s) {
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b)
            if (q.at(s[a], s[b]) == 0) return false;
    auto arrow = [&](std::size_t x, std::size_t y) { return q.at(x, y) > 0; };
    bool three = false;
    for (std::size_t skip = 0; skip < 4 && !three; ++skip) {
        std::array<std::size_t, 3> t{};
        std::size_t m = 0;
        for (std::size_t a = 0; a < 4; ++a)
            if (a != skip) t[m++] = s[a];
        three = (arrow(t[0], t[1]) && arrow(t[1], t[2]) && arrow(t[2], t[0])) ||
                (arrow(t[0], t[2]) && arrow(t[2], t[1]) && arrow(t[1], t[0]));
    }
    if (!three) return false;
    std::array<std::size_t, 3> rest{s[1], s[2], s[3]};
    std::sort(rest.begin(), rest.end());
    do {
        if (arrow(s[0], rest[0]) && arrow(rest[0], rest[1]) && arrow(rest[1], rest[2]) && arrow(rest[2], s[0]))
            return false;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return true;
}

}  // namespace

bool is_vortex(const Quiver& q) {
    if (q.size() != 4) throw DomainError("is_vortex requires exactly 4 vertices");
    return vortex_on(q, {0, 1, 2, 3});
}

std::optional<std::array<std::size_t, 4>> contains_vortex(const Quiver& q) {
    const std::size_t n = q.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d)
                    if (vortex_on(q, {a, b, c, d})) return std::array<std::size_t, 4>{a, b, c, d};
    return std::nullopt;
}

bool is_vortex_free(const Quiver& q) { return !contains_vortex(q).has_value(); }

std::optional<std::size_t> is_fork(const Quiver& q) {
    const std::size_t n = q.size();
    if (!is_abundant(q) || is_acyclic(q)) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (q.at(i, r) <= 0) continue;
            for (std::size_t j = 0; j < n && ok; ++j) {
                if (q.at(r, j) <= 0) continue;
                if (!(q.at(j, i) > q.at(i, r) && q.at(j, i) > q.at(r, j))) ok = false;
            }
        }
        if (!ok) continue;
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < n; ++i)
            if (i != r) rest.push_back(i);
        if (is_acyclic(subquiver_by_index(q, rest))) return r;
    }
    return std::nullopt;
}

Int det_b(const Quiver& q) { return det(q.b()); }
std::size_t rank_b(const Quiver& q) { return rank(q.b()); }

}  // namespace coqkit
