#pragma once

#include <initializer_list>
#include <vector>

#include "janet/binomial.hpp"
#include "janet/monomial.hpp"
#include "janet/order.hpp"

inline janet::Monomial mono(std::initializer_list<int64_t> exps) {
    return janet::Monomial::from_dense(std::vector<int64_t>(exps));
}

inline janet::Binomial bino(std::initializer_list<int64_t> a, std::initializer_list<int64_t> b,
                            const janet::MonomialOrder& ord) {
    return *janet::Binomial::orient(mono(a), mono(b), ord);
}
