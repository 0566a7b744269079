#include "janet/order.hpp"

#include "doctest.h"
#include "janet/errors.hpp"
#include "testutil.hpp"

using namespace janet;

TEST_CASE("lex compares first differing variable") {
    auto ord = MonomialOrder::lex(3);
    CHECK(ord.greater(mono({1, 0, 0}), mono({0, 9, 9})));
    CHECK(ord.greater(mono({1, 1, 0}), mono({1, 0, 9})));
    CHECK(ord.less(mono({0, 2, 0}), mono({0, 2, 1})));
    CHECK(ord.compare(mono({1, 2, 3}), mono({1, 2, 3})) == std::strong_ordering::equal);
}

TEST_CASE("degrevlex: degree first, then last differing variable smaller wins") {
    auto ord = MonomialOrder::degrevlex(3);
    CHECK(ord.greater(mono({2, 0, 0}), mono({0, 0, 1})));
    // Equal degree, x^2 vs x*y: last differing var is y, x^2 has 0 there.
    CHECK(ord.greater(mono({2, 0, 0}), mono({1, 1, 0})));
    // Pinned convention check: x^2*y > x*z^2.
    CHECK(ord.greater(mono({2, 1, 0}), mono({1, 0, 2})));
}

TEST_CASE("degrevlex standard ladder in three variables") {
    auto ord = MonomialOrder::degrevlex(3);
    // Degree 2 ladder: x^2 > xy > y^2 > xz > yz > z^2.
    std::vector<Monomial> ladder{mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0}),
                                 mono({1, 0, 1}), mono({0, 1, 1}), mono({0, 0, 2})};
    for (size_t i = 0; i < ladder.size(); ++i) {
        for (size_t j = i + 1; j < ladder.size(); ++j) {
            CHECK(ord.greater(ladder[i], ladder[j]));
            CHECK(ord.less(ladder[j], ladder[i]));
        }
    }
}

TEST_CASE("weight order uses cost then tiebreak") {
    auto ord = MonomialOrder::weight({1, 10, 100});
    CHECK(ord.greater(mono({0, 0, 1}), mono({9, 1, 0})));
    CHECK(ord.less(mono({5, 0, 0}), mono({0, 1, 0})));
    // Equal cost: degrevlex settles it.
    auto tie = MonomialOrder::weight({1, 1, 1});
    CHECK(tie.greater(mono({2, 1, 0}), mono({1, 0, 2})));
    CHECK_THROWS_AS(MonomialOrder::weight({1, -1}), InputError);
}

TEST_CASE("zero weights degenerate to the tiebreak") {
    auto ord = MonomialOrder::weight({0, 0});
    auto drl = MonomialOrder::degrevlex(2);
    std::vector<Monomial> ms{mono({0, 0}), mono({1, 0}), mono({0, 1}), mono({2, 1}), mono({1, 2})};
    for (const auto& a : ms) {
        for (const auto& b : ms) {
            CHECK(ord.compare(a, b) == drl.compare(a, b));
        }
    }
}

TEST_CASE("block order eliminates the left block") {
    // One eliminated variable t, then degrevlex on the remaining three.
    auto ord = MonomialOrder::block(1, MonomialOrder::lex(1), MonomialOrder::degrevlex(3));
    CHECK(ord.ambient() == 4);
    CHECK(ord.greater(mono({1, 0, 0, 0}), mono({0, 9, 9, 9})));
    CHECK(ord.greater(mono({2, 0, 0, 0}), mono({1, 9, 9, 9})));
    // t-free monomials compare by the right block.
    CHECK(ord.greater(mono({0, 2, 1, 0}), mono({0, 1, 0, 2})));
    CHECK(ord.compare(mono({0, 1, 2, 3}), mono({0, 1, 2, 3})) == std::strong_ordering::equal);
    CHECK_THROWS_AS(MonomialOrder::block(2, MonomialOrder::lex(1), MonomialOrder::lex(1)),
                    InputError);
}

TEST_CASE("orders reject foreign ambient") {
    auto ord = MonomialOrder::lex(2);
    CHECK_THROWS_AS(ord.compare(mono({1}), mono({1})), InputError);
}
