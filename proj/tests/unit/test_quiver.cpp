#include "doctest.h"

#include "coqkit/quiver.hpp"
#include "fixtures.hpp"
#include "unit/oracles.hpp"

#include <random>

using namespace coqkit;

namespace {

bool skew(const Quiver& q) {
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            if (q.at(i, j) != -q.at(j, i)) return false;
    return true;
}

Quiver arrowless(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    return Quiver(names, IntMat(n));
}

}  // namespace

TEST_CASE("construction rejects bad matrices and names") {
    CHECK_THROWS_AS(Quiver({"a", "b"}, IntMat{{0, 1}, {1, 0}}), DomainError);
    CHECK_THROWS_AS(Quiver({"a", "b"}, IntMat{{1, 0}, {0, 0}}), DomainError);
    CHECK_THROWS_AS(Quiver({"a", "a"}, IntMat{{0, 1}, {-1, 0}}), DomainError);
    CHECK_THROWS_AS(Quiver::from_arrows({"a", "b"}, {{"a", "c", 1}}), DomainError);
    auto q = Quiver::from_arrows({"a", "b"}, {{"a", "b", 5}});
    CHECK(q.at(0, 1) == 5);
    CHECK(q.at(1, 0) == -5);
}

TEST_CASE("mutating the A3 path at its middle gives the oriented 3-cycle") {
    auto q = fixture::load("path-a3").quiver;
    auto m = mutate(q, "b");
    CHECK(m.at(q.index("c"), q.index("b")) == 1);
    CHECK(m.at(q.index("b"), q.index("a")) == 1);
    CHECK(m.at(q.index("a"), q.index("c")) == 1);
    CHECK(q.at(0, 2) == 0);  // input untouched
    CHECK_THROWS_AS(mutate(q, "z"), DomainError);
}

TEST_CASE("mutation at a sink only reverses incident arrows") {
    auto q = Quiver::from_arrows({"a", "b", "c", "d"}, {{"a", "d", 2}, {"b", "d", 1}, {"a", "b", 3}, {"c", "a", 1}});
    auto m = mutate(q, "d");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            bool touches = i == 3 || j == 3;
            CHECK(m.at(i, j) == (touches ? Int(-q.at(i, j)) : q.at(i, j)));
        }
}

TEST_CASE("Markov quiver mutates to an isomorphic quiver") {
    auto q = oracle::markov();
    for (std::size_t j = 0; j < 3; ++j)
        CHECK(oracle::brute_canonical(mutate(q, j).b()) == oracle::brute_canonical(q.b()));
}

TEST_CASE("mutation is an involution and preserves skew-symmetry, rank and det") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + trial % 6;
        auto q = oracle::random_quiver(rng, n, 4, 0.6);
        std::size_t j = rng() % n;
        auto m = mutate(q, j);
        CHECK(skew(m));
        CHECK(mutate(m, j) == q);
        CHECK(rank_b(m) == rank_b(q));
        CHECK(det_b(m) == det_b(q));
    }
}

TEST_CASE("opposite quivers") {
    auto left = fixture::load("opposite-left").quiver;
    auto right = fixture::load("opposite-right").quiver;
    CHECK(opposite_arrows(left) == right);
    CHECK(opposite_arrows(opposite_arrows(left)) == left);
    auto acyclic = fixture::load("fig1-1").quiver;
    CHECK(is_acyclic(opposite_arrows(acyclic)));
}

TEST_CASE("full subquivers") {
    auto q = fixture::load("loq-example").quiver;
    CHECK(subquiver(q, q.vertices()) == q);
    auto sub = subquiver(q, {"v1", "v3", "v4"});
    CHECK(oracle::brute_canonical(sub.b()) == oracle::brute_canonical(oracle::markov().b()));
    CHECK(subquiver(q, {}).size() == 0);
    CHECK_THROWS_AS(subquiver(q, {"nope"}), DomainError);
}

TEST_CASE("underlying graph ignores multiplicities") {
    auto g = underlying_graph(fixture::load("fig1-1").quiver);
    CHECK(g.edge_count() == 6);
    CHECK(underlying_graph(arrowless(4)).edge_count() == 0);
    auto single = Quiver::from_arrows({"a", "b"}, {{"a", "b", 5}});
    CHECK(underlying_graph(single).edge_count() == 1);
}

TEST_CASE("chordless cycles") {
    auto hex = fixture::load("hexagon").quiver;
    auto cycles = chordless_cycles(underlying_graph(hex));
    CHECK(cycles.size() == 7);
    std::size_t triangles = 0, hexagons = 0;
    for (const auto& c : cycles) {
        if (c.length() == 3) ++triangles;
        if (c.length() == 6) ++hexagons;
    }
    CHECK(triangles == 6);
    CHECK(hexagons == 1);

    CHECK(chordless_cycles(underlying_graph(fixture::load("dynkin-e8").quiver)).empty());
    auto k4 = chordless_cycles(underlying_graph(fixture::load("fig1-1").quiver));
    CHECK(k4.size() == 4);
    for (const auto& c : k4) CHECK(c.length() == 3);

    CHECK_THROWS_AS(chordless_cycles(underlying_graph(hex), 3), ResourceError);
}

TEST_CASE("chordless cycles match subset enumeration and are chordless") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 3 + trial % 5;
        auto q = oracle::random_quiver(rng, n, 2, 0.55);
        auto g = underlying_graph(q);
        auto cycles = chordless_cycles(g);
        CHECK(cycles.size() == oracle::chordless_cycle_count(q));
        for (const auto& c : cycles) {
            const std::size_t k = c.length();
            REQUIRE(k >= 3);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = a + 1; b < k; ++b) {
                    bool consecutive = b == a + 1 || (a == 0 && b == k - 1);
                    CHECK(g.adjacent(c.v[a], c.v[b]) == consecutive);
                }
        }
    }
}

TEST_CASE("homology basis has first Betti number many cycles") {
    CHECK(homology_basis(underlying_graph(fixture::load("dynkin-d6").quiver)).empty());
    auto cyc = oracle::oriented_cycle(5);
    auto basis = homology_basis(underlying_graph(cyc));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].length() == 5);
    CHECK(homology_basis(underlying_graph(fixture::load("grid-2x6").quiver)).size() == 5);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        auto q = oracle::random_quiver(rng, 2 + trial % 7, 3, 0.4);
        auto g = underlying_graph(q);
        CHECK(homology_basis(g).size() == g.edge_count() - g.size() + g.components());
    }
}

TEST_CASE("structural predicates") {
    auto k4 = fixture::load("fig1-1").quiver;
    CHECK(is_acyclic(k4));
    CHECK(is_complete(k4));
    CHECK_FALSE(is_abundant(k4));
    auto empty = arrowless(3);
    CHECK(is_acyclic(empty));
    CHECK_FALSE(is_complete(empty));
    auto m = oracle::markov();
    CHECK(is_abundant(m));
    CHECK_FALSE(is_acyclic(m));
    CHECK(is_tree(fixture::load("dynkin-e7").quiver));
    CHECK_FALSE(is_tree(fixture::load("cycle-d4").quiver));
}

TEST_CASE("vortices") {
    for (int i = 1; i <= 4; ++i) {
        auto q = fixture::load("vortex-" + std::to_string(i)).quiver;
        CHECK(is_vortex(q));
    }
    CHECK_FALSE(is_vortex(fixture::load("cycle-d4").quiver));
    auto left = fixture::load("fig13-2").quiver;
    CHECK_FALSE(is_vortex(left));
    CHECK(is_vortex(mutate(left, "a")));
    CHECK_THROWS_AS(is_vortex(oracle::markov()), DomainError);
    CHECK(is_vortex_free(fixture::load("fork-family").quiver));
}

TEST_CASE("vortex predicate agrees with its defining conditions on all 4-vertex tournaments") {
    const std::size_t pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int code = 0; code < 4096; ++code) {
        IntMat b(4);
        int c = code;
        for (auto [i, j] : pairs) {
            int w = (c & 1) ? 2 : 1;
            int dir = (c >> 1) & 1;
            c >>= 2;
            b(i, j) = dir ? w : -w;
            b(j, i) = -b(i, j);
        }
        Quiver q({"a", "b", "c", "d"}, b);
        bool tri = false, quad = false;
        std::vector<std::size_t> p{0, 1, 2, 3};
        do {
            if (q.at(p[0], p[1]) > 0 && q.at(p[1], p[2]) > 0 && q.at(p[2], p[0]) > 0) tri = true;
            if (q.at(p[0], p[1]) > 0 && q.at(p[1], p[2]) > 0 && q.at(p[2], p[3]) > 0 && q.at(p[3], p[0]) > 0)
                quad = true;
        } while (std::next_permutation(p.begin(), p.end()));
        CHECK(is_vortex(q) == (tri && !quad));
    }
}

TEST_CASE("forks") {
    // Literal reading of the definition: this family member already is a fork
    // with return at v1.
    auto fam = fixture::load("fork-family").quiver;
    auto r = is_fork(fam);
    REQUIRE(r);
    CHECK(fam.name(*r) == "v1");
    for (std::size_t k = 0; k < fam.size(); ++k) {
        auto f = is_fork(mutate(fam, k));
        REQUIRE(f);
        CHECK(*f == k);
    }
    CHECK_FALSE(is_fork(fixture::load("fig1-1").quiver));
    CHECK_FALSE(is_fork(fixture::load("annulus").quiver));

    // acyclic abundant quivers are never forks
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto q = oracle::random_complete(rng, 4 + trial % 2, 5);
        if (is_acyclic(q)) CHECK_FALSE(is_fork(q));
    }
}

TEST_CASE("determinant and rank of exchange matrices") {
    CHECK(det_b(fixture::load("path-a4").quiver) == 1);
    CHECK(det_b(fixture::load("cycle-d4").quiver) == 0);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        auto q = oracle::random_quiver(rng, 5, 6, 0.8);
        CHECK(det_b(q) == 0);
    }
    CHECK(rank_b(fixture::load("path-a3").quiver) == 2);
}

TEST_CASE("relabel reorders vertices") {
    auto q = fixture::load("path-a3").quiver;
    auto r = relabel(q, {2, 0, 1});
    CHECK(r.vertices() == std::vector<std::string>{"c", "a", "b"});
    CHECK(r.at(1, 2) == 1);
    CHECK(r.at(2, 0) == 1);
}
