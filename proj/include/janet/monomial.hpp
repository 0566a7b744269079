#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace janet {

// Variables are identified by 1-based position. Position 1 is the greatest
// variable of the order; larger positions are smaller variables.
using VarIndex = int;

int64_t checked_add(int64_t a, int64_t b);
int64_t checked_sub(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

struct VarDeg {
    VarIndex var;
    int64_t deg;

    auto operator<=>(const VarDeg&) const = default;
};

// A monomial in `ambient` variables, stored as a sparse list of nonzero
// exponents sorted by variable position.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int ambient);
    Monomial(int ambient, std::vector<VarDeg> entries);

    static Monomial from_dense(const std::vector<int64_t>& exps);

    int ambient() const { return ambient_; }
    bool is_unit() const { return entries_.empty(); }
    int64_t deg(VarIndex v) const;
    int64_t total_degree() const { return total_; }
    // Sum of exponents of the variables in positions [lo, hi].
    int64_t total_degree_range(VarIndex lo, VarIndex hi) const;
    const std::vector<VarDeg>& entries() const { return entries_; }
    std::vector<int64_t> dense() const;
    // Largest variable position carrying a nonzero exponent; 0 for the unit.
    VarIndex last_var() const;

    bool operator==(const Monomial&) const = default;

private:
    int ambient_ = 0;
    int64_t total_ = 0;
    std::vector<VarDeg> entries_;
};

Monomial mul(const Monomial& u, const Monomial& v);
Monomial mul_var(const Monomial& u, VarIndex x);
// u / v; throws DivisibilityError unless v divides u.
Monomial divide(const Monomial& u, const Monomial& v);
// True when v divides u.
bool divides(const Monomial& v, const Monomial& u);
Monomial lcm(const Monomial& u, const Monomial& v);
bool coprime(const Monomial& u, const Monomial& v);

// Arbitrary strict total order on monomials (not a term order); used only
// for deterministic container keys.
bool plain_less(const Monomial& u, const Monomial& v);

std::string to_text(const Monomial& u, const std::vector<std::string>& names);

}  // namespace janet
