#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

#include "janet/monomial.hpp"

namespace janet {

// A monomial order on a fixed ambient set of variables. Position 1 is the
// greatest variable. Value type; cheap to copy.
class MonomialOrder {
public:
    static MonomialOrder lex(int ambient);
    static MonomialOrder degrevlex(int ambient);
    // Weighted order: compare c-weight first (c must be componentwise >= 0),
    // ties broken by `tiebreak` (degrevlex of the same ambient by default).
    static MonomialOrder weight(std::vector<int64_t> c);
    static MonomialOrder weight(std::vector<int64_t> c, MonomialOrder tiebreak);
    // Block (elimination) order: positions [1, split] compared by `left`
    // first, then positions [split+1, ambient] by `right`.
    static MonomialOrder block(int split, MonomialOrder left, MonomialOrder right);

    int ambient() const;
    std::strong_ordering compare(const Monomial& u, const Monomial& v) const;
    bool less(const Monomial& u, const Monomial& v) const {
        return compare(u, v) == std::strong_ordering::less;
    }
    bool greater(const Monomial& u, const Monomial& v) const {
        return compare(u, v) == std::strong_ordering::greater;
    }

    class Impl;

private:
    explicit MonomialOrder(std::shared_ptr<const Impl> impl);

    std::shared_ptr<const Impl> impl_;
};

}  // namespace janet
