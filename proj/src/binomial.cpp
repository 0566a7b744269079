#include "janet/binomial.hpp"

namespace janet {

std::optional<Binomial> Binomial::orient(const Monomial& a, const Monomial& b,
                                         const MonomialOrder& ord) {
    auto c = ord.compare(a, b);
    if (c == std::strong_ordering::equal) {
        return std::nullopt;
    }
    if (c == std::strong_ordering::greater) {
        return Binomial(a, b);
    }
    return Binomial(b, a);
}

Binomial mul(const Binomial& f, const Monomial& m) {
    return Binomial(mul(f.lead_, m), mul(f.tail_, m));
}

Binomial mul_var(const Binomial& f, VarIndex x) {
    return Binomial(mul_var(f.lead_, x), mul_var(f.tail_, x));
}

Monomial reduce_term(const Monomial& m, const Binomial& g) {
    return mul(divide(m, g.lead()), g.tail());
}

std::string to_text(const Binomial& f, const std::vector<std::string>& names) {
    return to_text(f.lead(), names) + " - " + to_text(f.tail(), names);
}

}  // namespace janet
