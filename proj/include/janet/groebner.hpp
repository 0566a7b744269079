#pragma once

#include <optional>
#include <vector>

#include "janet/binomial.hpp"

namespace janet {

// S-binomial of f and g; absent when it cancels to zero outright.
std::optional<Binomial> spoly(const Binomial& f, const Binomial& g, const MonomialOrder& ord);

// Full normal form of h against G under plain lead divisibility; absent
// when h reduces to zero. Among several reducers the one with the
// greatest lead is taken.
std::optional<Binomial> nf_ordinary(const Binomial& h, const std::vector<Binomial>& G,
                                    const MonomialOrder& ord);

// Buchberger completion with the normal selection strategy and the
// coprimality and chain criteria.
std::vector<Binomial> buchberger(const std::vector<Binomial>& F, const MonomialOrder& ord);

// The reduced basis: minimal leads, tails fully reduced, sorted ascending
// by lead. Input must be a Groebner basis.
std::vector<Binomial> autoreduce(const std::vector<Binomial>& G, const MonomialOrder& ord);

// Whether F and G generate the same ideal, decided by comparing reduced
// bases.
bool ideal_equal(const std::vector<Binomial>& F, const std::vector<Binomial>& G,
                 const MonomialOrder& ord);

}  // namespace janet
