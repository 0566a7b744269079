#include "janet/janet_tree.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "janet/errors.hpp"
#include "testutil.hpp"

using namespace janet;

namespace {

JanetTree build(const std::vector<Monomial>& U) {
    JanetTree t(U.empty() ? 1 : U[0].ambient());
    for (size_t i = 0; i < U.size(); ++i) {
        t.insert(U[i], i);
    }
    return t;
}

// The five-member running example: x^2*y, x*z, y^2, y*z, z^2.
std::vector<Monomial> example_set() {
    return {mono({2, 1, 0}), mono({1, 0, 1}), mono({0, 2, 0}), mono({0, 1, 1}),
            mono({0, 0, 2})};
}

std::vector<Monomial> grid(int n, int64_t maxdeg) {
    std::vector<Monomial> out;
    std::vector<int64_t> exps(static_cast<size_t>(n), 0);
    for (;;) {
        out.push_back(Monomial::from_dense(exps));
        int i = 0;
        while (i < n && exps[static_cast<size_t>(i)] == maxdeg) {
            exps[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == n) break;
        ++exps[static_cast<size_t>(i)];
    }
    return out;
}

void check_agreement(const std::vector<Monomial>& U, const JanetTree& t,
                     const std::vector<Monomial>& queries) {
    int n = t.ambient();
    for (const Monomial& w : queries) {
        int visits = 0;
        auto got = t.find_with_visits(w, visits);
        auto want = j_divisor_naive(U, w);
        REQUIRE(got == want);
        REQUIRE(visits <= n + w.total_degree() + 1);
    }
}

}  // namespace

TEST_CASE("golden tree shape for the running example") {
    std::vector<std::string> names{"x", "y", "z"};
    std::string expected =
        "(1,0)\n"
        "  (2,0)\n"
        "    (3,2) {z^2}\n"
        "  (2,1)\n"
        "    (3,1) {y*z}\n"
        "  (2,2) {y^2}\n"
        "(1,1)\n"
        "  (2,0)\n"
        "    (3,1) {x*z}\n"
        "(1,2)\n"
        "  (2,1) {x^2*y}\n";
    auto U = example_set();
    std::mt19937 rng(7);
    for (int trial = 0; trial < 24; ++trial) {
        std::shuffle(U.begin(), U.end(), rng);
        JanetTree t = build(U);
        t.check_invariants();
        CHECK(t.dump(names) == expected);
    }
}

TEST_CASE("nonmultiplicative variables of the running example") {
    auto U = example_set();
    auto nm = nm_vars(U);
    CHECK(nm[0] == std::vector<VarIndex>{});

    CHECK(nm[1] == std::vector<VarIndex>{1});
    CHECK(nm[2] == std::vector<VarIndex>{1});
    CHECK(nm[3] == std::vector<VarIndex>{1, 2});
    CHECK(nm[4] == std::vector<VarIndex>{1, 2});

    JanetTree t = build(U);
    std::vector<std::pair<size_t, uint64_t>> masks;
    t.collect_nm_masks(masks);
    REQUIRE(masks.size() == U.size());
    std::sort(masks.begin(), masks.end());
    CHECK(masks[0] == std::pair<size_t, uint64_t>{0, 0});
    CHECK(masks[1] == std::pair<size_t, uint64_t>{1, 0b001});
    CHECK(masks[2] == std::pair<size_t, uint64_t>{2, 0b001});
    CHECK(masks[3] == std::pair<size_t, uint64_t>{3, 0b011});
    CHECK(masks[4] == std::pair<size_t, uint64_t>{4, 0b011});
}

TEST_CASE("divisor lookups on the running example") {
    auto U = example_set();
    JanetTree t = build(U);
    // x^2*y has no nonmultiplicative variables: any multiple qualifies.
    CHECK(t.find(mono({5, 7, 9})) == size_t{0});
    CHECK(t.find(mono({2, 1, 0})) == size_t{0});
    // x*z requires the degree of x to match exactly.
    CHECK(t.find(mono({1, 2, 5})) == size_t{1});
    CHECK_FALSE(t.find(mono({2, 0, 1})).has_value());
    CHECK(t.find(mono({0, 2, 0})) == size_t{2});
    CHECK_FALSE(t.find(mono({0, 1, 0})).has_value());
    check_agreement(U, t, grid(3, 3));
}

TEST_CASE("degree chain above a member blocks excess degrees") {
    // Set {y^2, y^5, y*z}: y^2 plainly divides y^3*z but y is
    // nonmultiplicative for it, so there is no Janet divisor.
    std::vector<Monomial> U{mono({0, 2, 0}), mono({0, 5, 0}), mono({0, 1, 1})};
    JanetTree t = build(U);
    t.check_invariants();
    CHECK_FALSE(t.find(mono({0, 3, 1})).has_value());
    CHECK_FALSE(j_divisor_naive(U, mono({0, 3, 1})).has_value());
    CHECK(t.find(mono({0, 2, 0})) == size_t{0});
    CHECK(t.find(mono({0, 6, 0})) == size_t{1});
    CHECK(t.find(mono({0, 1, 3})) == size_t{2});
    check_agreement(U, t, grid(3, 6));
}

TEST_CASE("member nodes may carry a degree chain") {
    std::vector<Monomial> U{mono({1}), mono({3})};
    JanetTree t = build(U);
    t.check_invariants();
    CHECK(t.find(mono({1})) == size_t{0});
    CHECK(t.find(mono({3})) == size_t{1});
    CHECK_FALSE(t.find(mono({2})).has_value());
    CHECK(t.find(mono({9})) == size_t{1});
    check_agreement(U, t, grid(1, 9));

    std::vector<Monomial> V{mono({0, 2, 0}), mono({0, 2, 3})};
    JanetTree s = build(V);
    s.check_invariants();
    check_agreement(V, s, grid(3, 4));
}

TEST_CASE("duplicates and absent members are rejected") {
    JanetTree t = build(example_set());
    CHECK_THROWS_AS(t.insert(mono({0, 1, 1}), 9), InputError);
    CHECK_THROWS_AS(t.remove(mono({1, 1, 1})), InputError);
    CHECK_THROWS_AS(t.remove(mono({9, 0, 0})), InputError);
    CHECK_THROWS_AS(t.find(mono({1, 1})), InputError);
    CHECK_THROWS_AS(JanetTree(0), InputError);
}

TEST_CASE("entries come back sorted with payloads") {
    auto U = example_set();
    JanetTree t = build(U);
    auto es = t.entries();
    REQUIRE(es.size() == U.size());
    for (size_t i = 1; i < es.size(); ++i) {
        CHECK(plain_less(es[i - 1].first, es[i].first));
    }
    for (const auto& [lm, payload] : es) {
        CHECK(lm == U[payload]);
    }
}

TEST_CASE("random sets agree with the definitional search") {
    std::mt19937 rng(20240811);
    auto pool3 = grid(3, 3);
    auto queries3 = grid(3, 5);
    for (int trial = 0; trial < 120; ++trial) {
        std::vector<Monomial> U;
        std::set<size_t> picked;
        std::uniform_int_distribution<size_t> pick(0, pool3.size() - 1);
        std::uniform_int_distribution<int> count(1, 9);
        int m = count(rng);
        for (int i = 0; i < m; ++i) {
            size_t j = pick(rng);
            if (picked.insert(j).second) {
                U.push_back(pool3[j]);
            }
        }
        JanetTree t = build(U);
        t.check_invariants();
        check_agreement(U, t, queries3);
    }
}

TEST_CASE("random insert and remove keep lookups exact") {
    std::mt19937 rng(987654);
    auto pool = grid(4, 2);
    auto queries = grid(4, 3);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Monomial> alive;
        JanetTree t(4);
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        for (int step = 0; step < 30; ++step) {
            const Monomial& m = pool[pick(rng)];
            auto it = std::find(alive.begin(), alive.end(), m);
            if (it == alive.end()) {
                t.insert(m, step);
                alive.push_back(m);
            } else {
                t.remove(m);
                alive.erase(it);
            }
            t.check_invariants();
            REQUIRE(t.size() == alive.size());
            for (const Monomial& w : queries) {
                auto got = t.find(w);
                auto want = j_divisor_naive(alive, w);
                if (want.has_value()) {
                    REQUIRE(got.has_value());
                    REQUIRE(t.entries()[0].first.ambient() == 4);
                    // Payloads differ between the two sides; compare members.
                    bool matched = false;
                    for (const auto& [lm, payload] : t.entries()) {
                        if (payload == got.value()) {
                            CHECK(lm == alive[want.value()]);
                            matched = true;
                        }
                    }
                    CHECK(matched);
                } else {
                    REQUIRE_FALSE(got.has_value());
                }
            }
        }
    }
}

TEST_CASE("removal restores the previous lookups") {
    auto U = example_set();
    JanetTree t = build(U);
    CHECK(t.remove(mono({0, 1, 1})) == size_t{3});
    t.check_invariants();
    CHECK(t.size() == 4);
    std::vector<Monomial> rest{U[0], U[1], U[2], U[4]};
    for (const Monomial& w : grid(3, 4)) {
        auto got = t.find(w);
        auto want = j_divisor_naive(rest, w);
        REQUIRE(got.has_value() == want.has_value());
        if (got.has_value()) {
            CHECK(U[got.value()] == rest[want.value()]);
        }
    }
    t.insert(U[3], 3);
    t.check_invariants();
    check_agreement(U, t, grid(3, 4));
}

TEST_CASE("visit counts stay within the linear bound") {
    std::mt19937 rng(5150);
    auto pool = grid(3, 4);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
        std::set<size_t> picked;
        std::vector<Monomial> U;
        for (int i = 0; i < 12; ++i) {
            size_t j = pick(rng);
            if (picked.insert(j).second && !pool[j].is_unit()) {
                U.push_back(pool[j]);
            }
        }
        if (U.empty()) continue;
        JanetTree t = build(U);
        for (const Monomial& w : grid(3, 8)) {
            int visits = 0;
            t.find_with_visits(w, visits);
            CHECK(visits <= 3 + w.total_degree() + 1);
        }
    }
}
