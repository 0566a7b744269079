#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "janet/binomial.hpp"
#include "janet/monomial.hpp"
#include "janet/order.hpp"

namespace janet {

// Dense row-major integer matrix.
struct Matrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<int64_t> data;

    Matrix() = default;
    Matrix(size_t r, size_t c) : rows(r), cols(c), data(r * c, 0) {}

    int64_t& at(size_t i, size_t j) { return data[i * cols + j]; }
    int64_t at(size_t i, size_t j) const { return data[i * cols + j]; }
};

// A·x for nonnegative or general integer x, with overflow checking.
std::vector<int64_t> matvec(const Matrix& A, const std::vector<int64_t>& x);

// An integer kernel vector; plus/minus are the positive and negative
// parts, disjointly supported, with u = plus - minus.
struct LatticeVector {
    std::vector<int64_t> u;

    Monomial plus() const;
    Monomial minus() const;
};

// min { c^T x : A x = b, x in N^n } with a known feasible point x0.
struct ToricInstance {
    Matrix A;
    std::vector<int64_t> b;
    std::vector<int64_t> c;
    std::vector<int64_t> x0;

    // Validates shapes, nonnegativity of c and x0, and A·x0 = b.
    ToricInstance(Matrix A, std::vector<int64_t> b, std::vector<int64_t> c,
                  std::vector<int64_t> x0);
};

// Basis of the integer kernel {u : A u = 0}, by unimodular column
// elimination of A stacked over the identity; empty when A has full
// column rank. Each vector has its first nonzero entry positive.
std::vector<LatticeVector> kernel_lattice(const Matrix& A);

// x^{u+} - x^{u-}, oriented under ord. The zero vector is rejected.
Binomial vector_to_binomial(const LatticeVector& u, const MonomialOrder& ord);

// Generators of <F> : (x1···xn)^inf. Adjoins an auxiliary variable t
// ahead of the others with the relation t·x1···xn - 1, computes a Janet
// basis under a t-eliminating block order, and keeps the t-free part.
std::vector<Binomial> saturate(const std::vector<Binomial>& F, const MonomialOrder& ord);

// Kernel basis, binomials, saturation: generators of the toric ideal
// of A, oriented under ord.
std::vector<Binomial> toric_generators(const Matrix& A, const MonomialOrder& ord);

// Reduces x^{x0} to its normal form modulo a Janet basis of the toric
// ideal under the cost-weighted order and returns the exponent vector.
// `gens`, when given, must generate the toric ideal of inst.A and skips
// the kernel and saturation steps. `step` observes each intermediate
// monomial of the final reduction.
std::vector<int64_t> ip_solve(const ToricInstance& inst,
                              const std::optional<std::vector<Binomial>>& gens = std::nullopt,
                              const std::function<void(const Monomial&)>& step = nullptr);

}  // namespace janet
