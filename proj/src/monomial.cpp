#include "janet/monomial.hpp"

#include <algorithm>
#include <limits>

#include "janet/errors.hpp"

namespace janet {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("exponent addition overflow");
    }
    return r;
}

int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw OverflowError("exponent subtraction overflow");
    }
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("exponent multiplication overflow");
    }
    return r;
}

Monomial::Monomial(int ambient) : ambient_(ambient) {
    if (ambient < 0) {
        throw InputError("negative ambient dimension");
    }
}

Monomial::Monomial(int ambient, std::vector<VarDeg> entries) : ambient_(ambient) {
    std::sort(entries.begin(), entries.end(),
              [](const VarDeg& a, const VarDeg& b) { return a.var < b.var; });
    for (const VarDeg& e : entries) {
        if (e.var < 1 || e.var > ambient) {
            throw InputError("variable position out of range");
        }
        if (e.deg < 0) {
            throw InputError("negative exponent");
        }
        if (!entries_.empty() && entries_.back().var == e.var) {
            entries_.back().deg = checked_add(entries_.back().deg, e.deg);
        } else if (e.deg > 0) {
            entries_.push_back(e);
        }
    }
    for (const VarDeg& e : entries_) {
        total_ = checked_add(total_, e.deg);
    }
}

Monomial Monomial::from_dense(const std::vector<int64_t>& exps) {
    std::vector<VarDeg> entries;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] != 0) {
            entries.push_back({static_cast<VarIndex>(i + 1), exps[i]});
        }
    }
    return Monomial(static_cast<int>(exps.size()), std::move(entries));
}

int64_t Monomial::deg(VarIndex v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const VarDeg& e, VarIndex x) { return e.var < x; });
    return (it != entries_.end() && it->var == v) ? it->deg : 0;
}

int64_t Monomial::total_degree_range(VarIndex lo, VarIndex hi) const {
    int64_t s = 0;
    for (const VarDeg& e : entries_) {
        if (e.var >= lo && e.var <= hi) {
            s = checked_add(s, e.deg);
        }
    }
    return s;
}

std::vector<int64_t> Monomial::dense() const {
    std::vector<int64_t> exps(static_cast<size_t>(ambient_), 0);
    for (const VarDeg& e : entries_) {
        exps[static_cast<size_t>(e.var - 1)] = e.deg;
    }
    return exps;
}

VarIndex Monomial::last_var() const {
    return entries_.empty() ? 0 : entries_.back().var;
}

namespace {

void require_same_ambient(const Monomial& u, const Monomial& v) {
    if (u.ambient() != v.ambient()) {
        throw InputError("ambient dimension mismatch");
    }
}

}  // namespace

Monomial mul(const Monomial& u, const Monomial& v) {
    require_same_ambient(u, v);
    std::vector<VarDeg> entries;
    entries.reserve(u.entries().size() + v.entries().size());
    auto a = u.entries().begin(), ae = u.entries().end();
    auto b = v.entries().begin(), be = v.entries().end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->var < b->var)) {
            entries.push_back(*a++);
        } else if (a == ae || b->var < a->var) {
            entries.push_back(*b++);
        } else {
            entries.push_back({a->var, checked_add(a->deg, b->deg)});
            ++a;
            ++b;
        }
    }
    return Monomial(u.ambient(), std::move(entries));
}

Monomial mul_var(const Monomial& u, VarIndex x) {
    return mul(u, Monomial(u.ambient(), {{x, 1}}));
}

Monomial divide(const Monomial& u, const Monomial& v) {
    require_same_ambient(u, v);
    std::vector<VarDeg> entries;
    entries.reserve(u.entries().size());
    auto b = v.entries().begin(), be = v.entries().end();
    for (const VarDeg& e : u.entries()) {
        while (b != be && b->var < e.var) {
            throw DivisibilityError("monomial does not divide");
        }
        int64_t d = e.deg;
        if (b != be && b->var == e.var) {
            d -= b->deg;
            ++b;
        }
        if (d < 0) {
            throw DivisibilityError("monomial does not divide");
        }
        if (d > 0) {
            entries.push_back({e.var, d});
        }
    }
    if (b != be) {
        throw DivisibilityError("monomial does not divide");
    }
    return Monomial(u.ambient(), std::move(entries));
}

bool divides(const Monomial& v, const Monomial& u) {
    require_same_ambient(u, v);
    auto a = u.entries().begin(), ae = u.entries().end();
    for (const VarDeg& e : v.entries()) {
        while (a != ae && a->var < e.var) {
            ++a;
        }
        if (a == ae || a->var != e.var || a->deg < e.deg) {
            return false;
        }
    }
    return true;
}

Monomial lcm(const Monomial& u, const Monomial& v) {
    require_same_ambient(u, v);
    std::vector<VarDeg> entries;
    entries.reserve(u.entries().size() + v.entries().size());
    auto a = u.entries().begin(), ae = u.entries().end();
    auto b = v.entries().begin(), be = v.entries().end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->var < b->var)) {
            entries.push_back(*a++);
        } else if (a == ae || b->var < a->var) {
            entries.push_back(*b++);
        } else {
            entries.push_back({a->var, std::max(a->deg, b->deg)});
            ++a;
            ++b;
        }
    }
    return Monomial(u.ambient(), std::move(entries));
}

bool coprime(const Monomial& u, const Monomial& v) {
    require_same_ambient(u, v);
    auto a = u.entries().begin(), ae = u.entries().end();
    auto b = v.entries().begin(), be = v.entries().end();
    while (a != ae && b != be) {
        if (a->var < b->var) {
            ++a;
        } else if (b->var < a->var) {
            ++b;
        } else {
            return false;
        }
    }
    return true;
}

bool plain_less(const Monomial& u, const Monomial& v) {
    return u.entries() < v.entries();
}

std::string to_text(const Monomial& u, const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) != u.ambient()) {
        throw InputError("name table size mismatch");
    }
    if (u.is_unit()) {
        return "1";
    }
    std::string out;
    for (const VarDeg& e : u.entries()) {
        if (!out.empty()) {
            out += "*";
        }
        out += names[static_cast<size_t>(e.var - 1)];
        if (e.deg != 1) {
            out += "^" + std::to_string(e.deg);
        }
    }
    return out;
}

}  // namespace janet
