#include "janet/toric.hpp"

#include <algorithm>
#include <cstdlib>

#include "janet/completion.hpp"
#include "janet/errors.hpp"

namespace janet {

std::vector<int64_t> matvec(const Matrix& A, const std::vector<int64_t>& x) {
    if (x.size() != A.cols) {
        throw InputError("vector length does not match the matrix");
    }
    std::vector<int64_t> y(A.rows, 0);
    for (size_t i = 0; i < A.rows; ++i) {
        int64_t acc = 0;
        for (size_t j = 0; j < A.cols; ++j) {
            acc = checked_add(acc, checked_mul(A.at(i, j), x[j]));
        }
        y[i] = acc;
    }
    return y;
}

Monomial LatticeVector::plus() const {
    std::vector<int64_t> e(u.size(), 0);
    for (size_t i = 0; i < u.size(); ++i) {
        e[i] = u[i] > 0 ? u[i] : 0;
    }
    return Monomial::from_dense(e);
}

Monomial LatticeVector::minus() const {
    std::vector<int64_t> e(u.size(), 0);
    for (size_t i = 0; i < u.size(); ++i) {
        e[i] = u[i] < 0 ? -u[i] : 0;
    }
    return Monomial::from_dense(e);
}

ToricInstance::ToricInstance(Matrix A_, std::vector<int64_t> b_, std::vector<int64_t> c_,
                             std::vector<int64_t> x0_)
    : A(std::move(A_)), b(std::move(b_)), c(std::move(c_)), x0(std::move(x0_)) {
    if (A.cols == 0) {
        throw InputError("constraint matrix has no columns");
    }
    if (A.data.size() != A.rows * A.cols) {
        throw InputError("matrix shape mismatch");
    }
    if (b.size() != A.rows) {
        throw InputError("right-hand side length does not match the matrix");
    }
    if (c.size() != A.cols) {
        throw InputError("cost length does not match the matrix");
    }
    if (x0.size() != A.cols) {
        throw InputError("starting point length does not match the matrix");
    }
    for (int64_t v : c) {
        if (v < 0) {
            throw InputError("negative cost coefficient");
        }
    }
    for (int64_t v : x0) {
        if (v < 0) {
            throw InputError("starting point has a negative coordinate");
        }
    }
    if (matvec(A, x0) != b) {
        throw InputError("starting point does not satisfy A x = b");
    }
}

std::vector<LatticeVector> kernel_lattice(const Matrix& A) {
    if (A.data.size() != A.rows * A.cols) {
        throw InputError("matrix shape mismatch");
    }
    size_t m = A.rows;
    size_t n = A.cols;
    std::vector<std::vector<int64_t>> col(n, std::vector<int64_t>(m + n, 0));
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < m; ++i) {
            col[j][i] = A.at(i, j);
        }
        col[j][m + j] = 1;
    }
    size_t r = 0;
    for (size_t row = 0; row < m && r < n; ++row) {
        for (;;) {
            size_t best = n;
            for (size_t j = r; j < n; ++j) {
                if (col[j][row] != 0 &&
                    (best == n || std::llabs(col[j][row]) < std::llabs(col[best][row]))) {
                    best = j;
                }
            }
            if (best == n) {
                break;
            }
            std::swap(col[r], col[best]);
            bool clear = true;
            for (size_t j = r + 1; j < n; ++j) {
                if (col[j][row] == 0) {
                    continue;
                }
                int64_t q = col[j][row] / col[r][row];
                for (size_t i = row; i < m + n; ++i) {
                    col[j][i] = checked_sub(col[j][i], checked_mul(q, col[r][i]));
                }
                if (col[j][row] != 0) {
                    clear = false;
                }
            }
            if (clear) {
                ++r;
                break;
            }
        }
    }
    std::vector<LatticeVector> out;
    out.reserve(n - r);
    for (size_t j = r; j < n; ++j) {
        std::vector<int64_t> u(col[j].begin() + m, col[j].end());
        for (int64_t v : u) {
            if (v != 0) {
                if (v < 0) {
                    for (int64_t& w : u) {
                        w = -w;
                    }
                }
                break;
            }
        }
        out.push_back(LatticeVector{std::move(u)});
    }
    return out;
}

Binomial vector_to_binomial(const LatticeVector& u, const MonomialOrder& ord) {
    auto f = Binomial::orient(u.plus(), u.minus(), ord);
    if (!f.has_value()) {
        throw InputError("zero lattice vector has no binomial");
    }
    return *f;
}

namespace {

Monomial shift_up(const Monomial& w) {
    std::vector<int64_t> d = w.dense();
    std::vector<int64_t> e(d.size() + 1, 0);
    std::copy(d.begin(), d.end(), e.begin() + 1);
    return Monomial::from_dense(e);
}

Monomial shift_down(const Monomial& w) {
    std::vector<int64_t> d = w.dense();
    return Monomial::from_dense(std::vector<int64_t>(d.begin() + 1, d.end()));
}

}  // namespace

std::vector<Binomial> saturate(const std::vector<Binomial>& F, const MonomialOrder& ord) {
    if (F.empty()) {
        return {};
    }
    int n = F[0].ambient();
    if (ord.ambient() != n) {
        throw InputError("order ambient does not match the generators");
    }
    auto ext = MonomialOrder::block(1, MonomialOrder::lex(1), ord);
    std::vector<Binomial> G;
    G.reserve(F.size() + 1);
    for (const Binomial& f : F) {
        G.push_back(*Binomial::orient(shift_up(f.lead()), shift_up(f.tail()), ext));
    }
    G.push_back(*Binomial::orient(Monomial::from_dense(std::vector<int64_t>(n + 1, 1)),
                                  Monomial::from_dense(std::vector<int64_t>(n + 1, 0)), ext));
    std::vector<Binomial> out;
    for (const Binomial& g : binomial_janet_basis(G, ext)) {
        if (g.lead().deg(1) == 0 && g.tail().deg(1) == 0) {
            out.push_back(*Binomial::orient(shift_down(g.lead()), shift_down(g.tail()), ord));
        }
    }
    return out;
}

std::vector<Binomial> toric_generators(const Matrix& A, const MonomialOrder& ord) {
    std::vector<Binomial> F;
    for (const LatticeVector& u : kernel_lattice(A)) {
        F.push_back(vector_to_binomial(u, ord));
    }
    return saturate(F, ord);
}

std::vector<int64_t> ip_solve(const ToricInstance& inst,
                              const std::optional<std::vector<Binomial>>& gens,
                              const std::function<void(const Monomial&)>& step) {
    if (std::all_of(inst.c.begin(), inst.c.end(), [](int64_t v) { return v == 0; })) {
        throw InputError("cost vector is identically zero");
    }
    auto wq = MonomialOrder::weight(inst.c);
    std::vector<Binomial> basis = gens.has_value() ? *gens : toric_generators(inst.A, wq);
    auto G = binomial_janet_basis(basis, wq);
    Monomial opt = monomial_normal_form(Monomial::from_dense(inst.x0), G, wq, step);
    std::vector<int64_t> x = opt.dense();
    if (matvec(inst.A, x) != inst.b) {
        throw Error("reduced point left the feasible fiber");
    }
    return x;
}

}  // namespace janet
