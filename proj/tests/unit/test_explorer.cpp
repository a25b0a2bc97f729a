#include "doctest.h"

#include "coqkit/explorer.hpp"
#include "fixtures.hpp"
#include "unit/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace coqkit;

namespace {

std::vector<COQ> tree_family(std::size_t n) {
    std::vector<COQ> fam;
    for (const auto& e : oracle::unlabeled_trees(n)) {
        auto q = oracle::tree_quiver(n, e);
        fam.push_back({q, CyclicOrdering::standard(q)});
    }
    return fam;
}

std::size_t unresolved_pairs(const CollisionReport& r) {
    std::size_t k = 0;
    for (const auto& g : r.groups) k += g.unresolved.size();
    return k;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 2 + trial % 6;
        auto q = oracle::random_quiver(rng, n, 3, 0.6);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(relabel(q, perm)) == canonical_form(q));
        CHECK(oracle::brute_canonical(canonical_form(q).b()) == oracle::brute_canonical(q.b()));
    }
    auto m = oracle::markov();
    CHECK(canonical_form(m).b() == canonical_form(relabel(m, {2, 0, 1})).b());

    auto a3 = fixture::load("path-a3").quiver;
    std::vector<std::size_t> perm{0, 1, 2};
    auto form = canonical_form(a3);
    do CHECK(canonical_form(relabel(a3, perm)) == form);
    while (std::next_permutation(perm.begin(), perm.end()));

    CHECK_THROWS_AS(canonical_form(oracle::path_a(11)), ResourceError);
}

TEST_CASE("mutation classes match the brute-force closure") {
    for (auto name : {"path-a3", "path-a4", "dynkin-d4", "cycle-d4", "a21", "markov"}) {
        auto q = fixture::load(name).quiver;
        auto r = mutation_class(q);
        CHECK(r.complete);
        CHECK(r.members.size() == oracle::brute_mutation_class(q, 1000).size());
    }
    CHECK(mutation_class(fixture::load("a21").quiver).members.size() == 2);
    CHECK(mutation_class(oracle::markov()).members.size() == 1);

    // A3: three path orientations and the oriented triangle
    auto a3 = mutation_class(fixture::load("path-a3").quiver);
    REQUIRE(a3.members.size() == 4);
    std::size_t triangles = 0;
    for (const auto& m : a3.members) triangles += underlying_graph(m.quiver).edge_count() == 3;
    CHECK(triangles == 1);
    for (const auto& m : a3.members) CHECK(class_contains(a3, relabel(m.quiver, {1, 2, 0})));
}

TEST_CASE("mutation class does not depend on the starting labeling") {
    std::mt19937_64 rng(2);
    auto q = fixture::load("path-a5").quiver;
    auto ref = mutation_class(q);
    std::vector<std::size_t> perm{0, 1, 2, 3, 4};
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        auto r = mutation_class(relabel(q, perm));
        REQUIRE(r.members.size() == ref.members.size());
        for (const auto& m : r.members) CHECK(class_contains(ref, m.quiver));
    }
}

TEST_CASE("exploration limits") {
    CHECK_THROWS_AS(validate(ExplorationLimits{0, 1, 1, true}), DomainError);
    CHECK_THROWS_AS(validate(ExplorationLimits{1, 1, 0, true}), DomainError);

    auto wild = fixture::load("qm-3").quiver;
    auto r = mutation_class(wild, ExplorationLimits{10000, 1000, 50, true});
    CHECK_FALSE(r.complete);
    for (const auto& m : r.members)
        for (auto x : m.quiver.b().data()) CHECK(abs(x) <= 50);

    auto small = mutation_class(fixture::load("path-a5").quiver, ExplorationLimits{3, 1000, 1000, true});
    CHECK_FALSE(small.complete);
    CHECK(small.members.size() == 3);

    auto shallow = mutation_class(fixture::load("path-a5").quiver, ExplorationLimits{10000, 1, 1000, true});
    CHECK_FALSE(shallow.complete);
    for (const auto& m : shallow.members) CHECK(m.depth <= 1);

    auto labeled = mutation_class(fixture::load("path-a3").quiver, ExplorationLimits{10000, 1000, 1000, false});
    CHECK(labeled.complete);
    CHECK(labeled.members.size() == 14);
}

TEST_CASE("proper mutation classes") {
    auto d4 = proper_mutation_class(fixture::coq("cycle-d4"));
    CHECK(d4.complete);
    CHECK(d4.members.size() == 6);
    for (const auto& m : d4.members) {
        REQUIRE(m.order);
        CHECK(is_proper_coq(COQ{m.quiver, *m.order}));
        CHECK(m.alexander == d4.members.front().alexander);
        CHECK(m.markov == d4.members.front().markov);
    }

    auto stuck = fixture::with_order(fixture::load("cycle-d4").quiver, {"a", "d", "c", "b"});
    auto single = proper_mutation_class(stuck);
    CHECK(single.complete);
    CHECK(single.members.size() == 1);
    CHECK(single.edges.empty());

    auto a3 = proper_mutation_class(fixture::coq("path-a3"));
    CHECK(a3.complete);
    CHECK(a3.members.size() == 4);
    std::size_t cyclic = 0;
    for (const auto& m : a3.members) cyclic += !is_acyclic(m.quiver);
    CHECK(cyclic == 1);
}

TEST_CASE("forkless parts") {
    ExplorationLimits wide{10000, 1000, 1000000000, true};
    // Literal definition: both members of this family are forks returning
    // at the vertex just mutated, so the search only toggles between them.
    auto fam = forkless_part(fixture::load("fork-family").quiver, wide);
    CHECK(fam.complete);
    CHECK(fam.members.size() == 2);
    for (const auto& m : fam.members) CHECK(m.fork_return);

    for (auto name : {"path-a4", "dynkin-d4", "dynkin-d6"}) {
        auto q = fixture::load(name).quiver;
        auto whole = mutation_class(q), part = forkless_part(q);
        CHECK(part.complete);
        CHECK(part.members.size() == whole.members.size());
    }

    auto q1 = fixture::load("remark-q1").quiver, q2 = fixture::load("remark-q2").quiver;
    auto p1 = forkless_part(q1, wide), p2 = forkless_part(q2, wide);
    CHECK(p1.complete);
    CHECK(p2.complete);
    CHECK_FALSE(class_contains(p1, q2));
    CHECK_FALSE(class_contains(p2, q1));
    auto path = mutate(mutate(mutate(q2, "v2"), "v4"), "v1");
    CHECK(class_contains(p2, path));
    CHECK(canonical_form(path) != canonical_form(q1));
}

TEST_CASE("forkless part lies inside the mutation class") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        auto q = oracle::random_quiver(rng, 4, 2, 0.6);
        ExplorationLimits lim{2000, 1000, 30, true};
        auto whole = mutation_class(q, lim), part = forkless_part(q, lim);
        if (!whole.complete || !part.complete) continue;
        for (const auto& m : part.members) CHECK(class_contains(whole, m.quiver));
    }
}

TEST_CASE("collision scan on trees") {
    auto six = collision_scan(tree_family(6), {5});
    CHECK(six.fingerprints.size() == 6);
    CHECK(six.groups.empty());

    auto eight = collision_scan(tree_family(8), {7});
    CHECK(eight.fingerprints.size() == 23);
    REQUIRE(eight.groups.size() == 1);
    CHECK(eight.groups[0].members.size() == 2);
    CHECK(eight.groups[0].unresolved.empty());

    auto nine = collision_scan(tree_family(9), {8});
    CHECK(nine.fingerprints.size() == 47);
    CHECK(nine.groups.size() == 5);
    for (const auto& g : nine.groups) CHECK(g.members.size() == 2);
    CHECK(unresolved_pairs(nine) == 3);
}

TEST_CASE("fingerprints ignore the choice of cyclic rotation") {
    auto c = fixture::coq("grid-2x6");
    auto seq = c.order.seq();
    auto f = fingerprint(c.quiver, seq, {2, 3});
    std::rotate(seq.begin(), seq.begin() + 5, seq.end());
    CHECK(fingerprint(c.quiver, seq, {2, 3}) == f);
}

TEST_CASE("exchange graph dump") {
    auto r = mutation_class(fixture::load("path-a3").quiver);
    auto dot = to_dot(r);
    CHECK(dot.rfind("graph exchange {", 0) == 0);
    for (std::size_t i = 0; i < r.members.size(); ++i)
        CHECK(dot.find("n" + std::to_string(i) + " [") != std::string::npos);
    for (auto [a, b] : r.edges)
        CHECK(dot.find("n" + std::to_string(a) + " -- n" + std::to_string(b)) != std::string::npos);
}
