#include "doctest.h"

#include "coqkit/braid.hpp"
#include "coqkit/proper.hpp"
#include "fixtures.hpp"
#include "unit/oracles.hpp"

#include <algorithm>
#include <random>

using namespace coqkit;

namespace {

IntMat random_unipotent(std::mt19937_64& rng, std::size_t n, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    IntMat u = IntMat::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) u(i, j) = d(rng);
    return u;
}

IntMat run(const IntMat& u, const std::string& word) { return act_word(u, parse_braid_word(word)).u; }

std::string gen(char kind, std::size_t i) { return std::string(1, kind) + std::to_string(i); }

std::vector<std::size_t> identity_order(std::size_t n) {
    std::vector<std::size_t> o(n);
    for (std::size_t i = 0; i < n; ++i) o[i] = i;
    return o;
}

}  // namespace

TEST_CASE("braid word syntax") {
    auto w = parse_braid_word("s2 S1 r3");
    REQUIRE(w.size() == 3);
    CHECK(w[0] == BraidGenerator{GenKind::sigma, 2});
    CHECK(w[1] == BraidGenerator{GenKind::sigma_inverse, 1});
    CHECK(w[2] == BraidGenerator{GenKind::rho, 3});
    CHECK(to_string(w) == "s2 S1 r3");
    CHECK(parse_braid_word("").empty());
    CHECK_THROWS_AS(parse_braid_word("x1"), ParseError);
    CHECK_THROWS_AS(parse_braid_word("s0"), ParseError);
    CHECK_THROWS_AS(parse_braid_word("s"), ParseError);
    CHECK_THROWS_AS(parse_braid_word("s1a"), ParseError);
    CHECK_THROWS_AS(check_word(parse_braid_word("s4"), 4), DomainError);
    CHECK_NOTHROW(check_word(parse_braid_word("r4 s3"), 4));
}

TEST_CASE("sigma on a generic 4x4 matrix") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        auto u = random_unipotent(rng, 4, 6);
        auto e = [&](int i, int j) { return Int(u(i - 1, j - 1)); };
        IntMat expected(4);
        for (std::size_t i = 0; i < 4; ++i) expected(i, i) = 1;
        expected(0, 1) = -e(1, 2) * e(2, 3) + e(1, 3);
        expected(0, 2) = e(1, 2);
        expected(0, 3) = e(1, 4);
        expected(1, 2) = -e(2, 3);
        expected(1, 3) = -e(2, 3) * e(2, 4) + e(3, 4);
        expected(2, 3) = e(2, 4);
        auto a = act_sigma(u, 2);
        CHECK(a.u == expected);
        CHECK(verify_congruence(u, a.g, a.u));

        IntMat inv(4);
        for (std::size_t i = 0; i < 4; ++i) inv(i, i) = 1;
        inv(0, 1) = e(1, 3);
        inv(0, 2) = -e(1, 3) * e(2, 3) + e(1, 2);
        inv(0, 3) = e(1, 4);
        inv(1, 2) = -e(2, 3);
        inv(1, 3) = e(3, 4);
        inv(2, 3) = -e(2, 3) * e(3, 4) + e(2, 4);
        auto b = act_sigma_inverse(u, 2);
        CHECK(b.u == inv);
        CHECK(verify_congruence(u, b.g, b.u));
    }
}

TEST_CASE("generators with a zero superdiagonal entry swap") {
    IntMat u{{1, 0, 3}, {0, 1, -2}, {0, 0, 1}};
    IntMat swapped{{1, 0, -2}, {0, 1, 3}, {0, 0, 1}};
    CHECK(act_sigma(u, 1).u == swapped);
    CHECK(act_sigma_inverse(u, 1).u == swapped);
    CHECK_THROWS_AS(act_sigma(u, 3), DomainError);
    CHECK_THROWS_AS(act_rho(u, 4), DomainError);
}

TEST_CASE("braid group relations on random matrices") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 4 + trial % 2;
        auto u = random_unipotent(rng, n, 5);
        for (std::size_t k = 1; k < n; ++k) {
            CHECK(run(u, gen('s', k) + " " + gen('S', k)) == u);
            CHECK(run(u, gen('S', k) + " " + gen('s', k)) == u);
            if (k + 1 < n) {
                auto a = gen('s', k), b = gen('s', k + 1);
                CHECK(run(u, a + " " + b + " " + a) == run(u, b + " " + a + " " + b));
            }
            for (std::size_t j = k + 2; j < n; ++j)
                CHECK(run(u, gen('s', k) + " " + gen('s', j)) == run(u, gen('s', j) + " " + gen('s', k)));
            // sign flips commute past sigma with the matching relabeling of strands
            for (std::size_t i = 1; i <= n; ++i) {
                std::size_t moved = i == k ? k + 1 : i == k + 1 ? k : i;
                CHECK(run(u, gen('r', i) + " " + gen('s', k)) == run(u, gen('s', k) + " " + gen('r', moved)));
            }
        }
        for (std::size_t i = 1; i <= n; ++i) CHECK(run(u, gen('r', i) + " " + gen('r', i)) == u);
        std::string all;
        for (std::size_t i = 1; i <= n; ++i) all += gen('r', i) + " ";
        CHECK(run(u, all) == u);

        auto shift = cyclic_shift_word(n);
        BraidWord twist;
        for (std::size_t i = 0; i < n; ++i) twist.insert(twist.end(), shift.begin(), shift.end());
        CHECK(act_word(u, twist).u == u);
        CHECK(act_word(u, BraidWord{}).u == u);

        auto composite = act_word(u, shift);
        CHECK(verify_congruence(u, composite.g, composite.u));
    }
}

TEST_CASE("one-step rotation as a braid word") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 3 + trial % 4;
        auto q = oracle::random_quiver(rng, n, 4, 0.7);
        auto order = identity_order(n);
        std::shuffle(order.begin(), order.end(), rng);
        LinearlyOrderedQuiver loq{q, order};
        auto rotated = act_word(loq, cyclic_shift_word(n));
        std::vector<std::size_t> expected(order.begin() + 1, order.end());
        expected.push_back(order.front());
        CHECK(rotated.loq.order == expected);
        CHECK(rotated.loq.quiver == q);
        CHECK(act_word(unipotent_companion(q, order).u, cyclic_shift_word(n)).u ==
              cyclic_shift_witness(q, order).result.u);
    }
}

TEST_CASE("sigma on a linearly ordered quiver") {
    std::mt19937_64 rng(4);
    auto u = random_unipotent(rng, 4, 4);
    auto b = exchange_from_unipotent(u);
    Quiver q({"v1", "v2", "v3", "v4"}, b);
    LinearlyOrderedQuiver loq{q, {0, 1, 2, 3}};
    auto r = act_word(loq, parse_braid_word("s2"));
    CHECK(r.loq.order == std::vector<std::size_t>{0, 2, 1, 3});
    // weight of v1 -> v3 is -u13 + u12 u23
    CHECK(r.loq.quiver.at(0, 2) == -u(0, 2) + u(0, 1) * u(1, 2));
    CHECK(r.loq.quiver.at(0, 1) == -u(0, 1));
    CHECK(r.loq.quiver.at(2, 3) == -u(2, 3) + u(1, 2) * u(1, 3));
    auto empty = act_word(loq, BraidWord{});
    CHECK(empty.loq == loq);

    std::string all;
    for (int i = 1; i <= 4; ++i) all += gen('r', i) + " ";
    CHECK(act_word(loq, parse_braid_word(all)).loq == loq);
    auto flip = act_word(loq, parse_braid_word("r2")).loq.quiver;
    for (std::size_t j = 0; j < 4; ++j) {
        if (j == 1) continue;
        CHECK(flip.at(1, j) == -q.at(1, j));
        for (std::size_t k = 0; k < 4; ++k)
            if (k != 1) CHECK(flip.at(j, k) == q.at(j, k));
    }
}

TEST_CASE("mutation words") {
    CHECK(to_string(mutation_word(3, 4)) == "S2 S1 r1");
    CHECK(to_string(mutation_word(1, 4)) == "r1");
    CHECK_THROWS_AS(mutation_word(5, 4), DomainError);

    // v1, v2 -> v3 -> v4 on the running 4-vertex example
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<long> d(-4, 4), neg(-4, -1);
        IntMat u = IntMat::identity(4);
        u(0, 1) = d(rng), u(0, 3) = d(rng), u(1, 3) = d(rng);
        u(0, 2) = neg(rng), u(1, 2) = neg(rng), u(2, 3) = neg(rng);
        Quiver q({"v1", "v2", "v3", "v4"}, exchange_from_unipotent(u));
        LinearlyOrderedQuiver loq{q, {0, 1, 2, 3}};
        auto r = act_word(loq, mutation_word(3, 4));
        CHECK(r.loq.order == std::vector<std::size_t>{2, 0, 1, 3});
        CHECK(r.loq.quiver == mutate(q, 2));
    }
}

TEST_CASE("mutation words agree with proper mutation") {
    std::mt19937_64 rng(6);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 80; ++trial) {
        std::size_t n = 3 + trial % 4;
        auto q = oracle::random_quiver(rng, n, 3, 0.7);
        std::size_t j = rng() % n;
        auto order = identity_order(n);
        std::shuffle(order.begin(), order.end(), rng);
        COQ c{q, CyclicOrdering(q, order)};
        if (!is_proper_vertex(c, j)) continue;
        // cut the cycle right after the clockwise-last Out(j) vertex, so that
        // In(j) < j < Out(j) linearly
        auto m = proper_mutate_at_proper(c, j);
        const auto& seq = c.order.seq();
        std::size_t start = c.order.pos(j), best = 0;
        for (auto v : in_out(q, j).outs) best = std::max(best, distance(c.order, j, v));
        start = (start + best + 1) % n;
        std::vector<std::size_t> before;
        for (std::size_t i = 0; i < n; ++i) before.push_back(seq[(start + i) % n]);
        std::size_t pos = std::find(before.begin(), before.end(), j) - before.begin();
        ++checked;
        LinearlyOrderedQuiver loq{q, before};
        auto r = act_word(loq, mutation_word(pos + 1, n));
        CHECK(r.loq.quiver == m.quiver);
        CHECK(r.loq.order.front() == j);
        CHECK(CyclicOrdering(m.quiver, r.loq.order) == m.order);
    }
    CHECK(checked >= 50);
}

TEST_CASE("wiggles are sigma moves on a zero superdiagonal") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 4 + trial % 3;
        auto q = oracle::random_quiver(rng, n, 3, 0.4);
        auto order = identity_order(n);
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (q.at(order[k], order[k + 1]) != 0) continue;
            auto r = act_word(LinearlyOrderedQuiver{q, order}, BraidWord{{GenKind::sigma, k + 1}});
            auto swapped = order;
            std::swap(swapped[k], swapped[k + 1]);
            CHECK(r.loq.quiver == q);
            CHECK(r.loq.order == swapped);
        }
    }
}

TEST_CASE("invariants survive braid words") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        auto u = random_unipotent(rng, 5, 3);
        BraidWord w;
        for (int i = 0; i < 8; ++i) {
            auto kind = static_cast<GenKind>(rng() % 3);
            std::size_t idx = kind == GenKind::rho ? 1 + rng() % 5 : 1 + rng() % 4;
            w.push_back({kind, idx});
        }
        auto r = act_word(u, w);
        CHECK(verify_congruence(u, r.g, r.u));
        CHECK(alexander_polynomial(r.u) == alexander_polynomial(u));
        CHECK(gcd_multiset(r.u) == gcd_multiset(u));
        CHECK(alexander_lattice(r.u, 2) == alexander_lattice(u, 2));
        CHECK(frobenius_form(cosquare(r.u)) == frobenius_form(cosquare(u)));
    }
}

TEST_CASE("reversal orbits") {
    auto tri = Quiver::from_arrows({"a", "b", "c"}, {{"a", "b", 1}, {"b", "c", 2}, {"c", "a", 3}});
    CHECK(reversal_orbit({tri, {0, 1, 2}}).size() == 4);
    Quiver empty({"a", "b", "c", "d"}, IntMat(4));
    CHECK(reversal_orbit({empty, {0, 1, 2, 3}}).size() == 1);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        auto q = oracle::random_complete(rng, 3, 4);
        auto orbit = reversal_orbit({q, {0, 1, 2}});
        REQUIRE(orbit.size() == 4);
        int proper_cyclic = 0, improper_acyclic = 0, improper_cyclic = 0, proper_acyclic = 0;
        for (const auto& l : orbit) {
            bool proper = is_proper_coq(COQ{l.quiver, CyclicOrdering(l.quiver, l.order)});
            bool acyclic = is_acyclic(l.quiver);
            if (proper && !acyclic) ++proper_cyclic;
            if (!proper && acyclic) ++improper_acyclic;
            if (!proper && !acyclic) ++improper_cyclic;
            if (proper && acyclic) ++proper_acyclic;
        }
        bool case_b = proper_cyclic == 1 && improper_acyclic == 3;
        bool case_c = improper_cyclic == 1 && proper_acyclic == 3;
        CHECK((case_b != case_c));
    }
}
