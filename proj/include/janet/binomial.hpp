#pragma once

#include <optional>
#include <string>

#include "janet/monomial.hpp"
#include "janet/order.hpp"

namespace janet {

// A monic pure difference of monomials x^a - x^b with x^a > x^b under the
// order it was oriented with. The zero binomial (a == b) is not
// representable; orientation reports it as absent.
class Binomial {
public:
    static std::optional<Binomial> orient(const Monomial& a, const Monomial& b,
                                          const MonomialOrder& ord);

    const Monomial& lead() const { return lead_; }
    const Monomial& tail() const { return tail_; }
    int ambient() const { return lead_.ambient(); }

    bool operator==(const Binomial&) const = default;

private:
    Binomial(Monomial lead, Monomial tail)
        : lead_(std::move(lead)), tail_(std::move(tail)) {}

    Monomial lead_;
    Monomial tail_;

    friend Binomial mul(const Binomial& f, const Monomial& m);
    friend Binomial mul_var(const Binomial& f, VarIndex x);
};

// Multiplication by a monomial preserves orientation under any term order.
Binomial mul(const Binomial& f, const Monomial& m);
Binomial mul_var(const Binomial& f, VarIndex x);

// One rewriting step of the term m by g: (m / lead(g)) * tail(g).
// Requires lead(g) | m.
Monomial reduce_term(const Monomial& m, const Binomial& g);

std::string to_text(const Binomial& f, const std::vector<std::string>& names);

}  // namespace janet
