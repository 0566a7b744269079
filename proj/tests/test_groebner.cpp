#include "janet/groebner.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "janet/errors.hpp"
#include "testutil.hpp"

using namespace janet;

namespace {

bool same_set(std::vector<Binomial> a, std::vector<Binomial> b, const MonomialOrder& ord) {
    auto less = [&](const Binomial& f, const Binomial& g) {
        auto c = ord.compare(f.lead(), g.lead());
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        return ord.less(f.tail(), g.tail());
    };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    return a == b;
}

}  // namespace

TEST_CASE("spoly cancels leads") {
    auto ord = MonomialOrder::degrevlex(3);
    Binomial f = bino({2, 0, 0}, {0, 1, 0}, ord);
    Binomial g = bino({1, 1, 0}, {0, 0, 1}, ord);
    auto s = spoly(f, g, ord);
    REQUIRE(s.has_value());
    CHECK(s->lead() == mono({0, 2, 0}));
    CHECK(s->tail() == mono({1, 0, 1}));
    // Identical binomials cancel outright.
    CHECK_FALSE(spoly(f, f, ord).has_value());
}

TEST_CASE("normal form reduces heads then tails") {
    auto ord = MonomialOrder::degrevlex(3);
    std::vector<Binomial> G{bino({2, 0, 0}, {0, 1, 0}, ord), bino({1, 1, 0}, {0, 0, 1}, ord)};
    // x^2*y - z^2 -> y^2 - z^2 via x^2 -> y, then heads settle.
    auto r = nf_ordinary(bino({2, 1, 0}, {0, 0, 2}, ord), G, ord);
    REQUIRE(r.has_value());
    CHECK(r->lead() == mono({0, 2, 0}));
    CHECK(r->tail() == mono({0, 0, 2}));
    // x^3 - x*y reduces to zero: x^3 -> x*y.
    CHECK_FALSE(nf_ordinary(bino({3, 0, 0}, {1, 1, 0}, ord), G, ord).has_value());
    // Tail reduction: y^3 - x^2*z -> y^3 - y*z.
    auto t = nf_ordinary(bino({0, 3, 0}, {2, 0, 1}, ord), G, ord);
    REQUIRE(t.has_value());
    CHECK(t->lead() == mono({0, 3, 0}));
    CHECK(t->tail() == mono({0, 1, 1}));
}

TEST_CASE("buchberger closes the running pair") {
    auto ord = MonomialOrder::degrevlex(3);
    std::vector<Binomial> F{bino({2, 0, 0}, {0, 1, 0}, ord), bino({1, 1, 0}, {0, 0, 1}, ord)};
    auto G = buchberger(F, ord);
    auto R = autoreduce(G, ord);
    std::vector<Binomial> expected{bino({2, 0, 0}, {0, 1, 0}, ord),
                                   bino({1, 1, 0}, {0, 0, 1}, ord),
                                   bino({0, 2, 0}, {1, 0, 1}, ord)};
    CHECK(same_set(R, expected, ord));
    // Every S-binomial of the closure reduces to zero.
    for (size_t i = 0; i < G.size(); ++i) {
        for (size_t j = i + 1; j < G.size(); ++j) {
            auto s = spoly(G[i], G[j], ord);
            if (s.has_value()) {
                CHECK_FALSE(nf_ordinary(*s, G, ord).has_value());
            }
        }
    }
}

TEST_CASE("reduced basis of the four-variable ideal") {
    auto ord = MonomialOrder::degrevlex(4);
    std::vector<Binomial> F{bino({7, 0, 0, 0}, {0, 2, 1, 0}, ord),
                            bino({4, 0, 0, 1}, {0, 3, 0, 0}, ord),
                            bino({3, 1, 0, 0}, {0, 0, 1, 1}, ord)};
    auto R = autoreduce(buchberger(F, ord), ord);
    std::vector<Binomial> expected{bino({7, 0, 0, 0}, {0, 2, 1, 0}, ord),
                                   bino({4, 0, 0, 1}, {0, 3, 0, 0}, ord),
                                   bino({3, 1, 0, 0}, {0, 0, 1, 1}, ord),
                                   bino({0, 4, 0, 0}, {1, 0, 1, 2}, ord)};
    CHECK(same_set(R, expected, ord));
}

TEST_CASE("autoreduce drops redundant members") {
    auto ord = MonomialOrder::degrevlex(2);
    std::vector<Binomial> G{bino({2, 0}, {0, 1}, ord), bino({3, 0}, {1, 1}, ord)};
    auto R = autoreduce(G, ord);
    REQUIRE(R.size() == 1);
    CHECK(R[0] == bino({2, 0}, {0, 1}, ord));
}

TEST_CASE("ideal equality compares reduced bases") {
    auto ord = MonomialOrder::degrevlex(2);
    std::vector<Binomial> F{bino({2, 0}, {0, 2}, ord)};
    std::vector<Binomial> G{bino({2, 0}, {0, 2}, ord), bino({3, 0}, {1, 2}, ord)};
    std::vector<Binomial> H{bino({1, 0}, {0, 1}, ord)};
    CHECK(ideal_equal(F, G, ord));
    CHECK_FALSE(ideal_equal(F, H, ord));
    CHECK(ideal_equal(H, H, ord));
}

TEST_CASE("random ideals cross-check spoly closure") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> nd(2, 3);
    std::uniform_int_distribution<int64_t> ed(0, 3);
    for (int trial = 0; trial < 30; ++trial) {
        int n = nd(rng);
        auto ord = MonomialOrder::degrevlex(n);
        std::vector<Binomial> F;
        int gens = 1 + (trial % 3);
        for (int i = 0; i < gens; ++i) {
            std::vector<int64_t> a(static_cast<size_t>(n)), b(static_cast<size_t>(n));
            for (int j = 0; j < n; ++j) {
                a[static_cast<size_t>(j)] = ed(rng);
                b[static_cast<size_t>(j)] = ed(rng);
            }
            auto f = Binomial::orient(Monomial::from_dense(a), Monomial::from_dense(b), ord);
            if (f.has_value()) F.push_back(*f);
        }
        if (F.empty()) continue;
        auto G = buchberger(F, ord);
        for (size_t i = 0; i < G.size(); ++i) {
            for (size_t j = i + 1; j < G.size(); ++j) {
                auto s = spoly(G[i], G[j], ord);
                if (s.has_value()) {
                    REQUIRE_FALSE(nf_ordinary(*s, G, ord).has_value());
                }
            }
        }
        auto R = autoreduce(G, ord);
        REQUIRE(ideal_equal(F, R, ord));
    }
}
