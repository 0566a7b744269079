#include "janet/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "janet/errors.hpp"

namespace janet {

std::optional<Binomial> spoly(const Binomial& f, const Binomial& g, const MonomialOrder& ord) {
    Monomial L = lcm(f.lead(), g.lead());
    Monomial a = mul(divide(L, g.lead()), g.tail());
    Monomial b = mul(divide(L, f.lead()), f.tail());
    return Binomial::orient(a, b, ord);
}

namespace {

// Reducer preference: greatest lead first; ties by tail for determinism.
std::vector<size_t> reducer_order(const std::vector<Binomial>& G, const MonomialOrder& ord) {
    std::vector<size_t> idx(G.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        auto c = ord.compare(G[a].lead(), G[b].lead());
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::greater;
        return ord.greater(G[a].tail(), G[b].tail());
    });
    return idx;
}

const Binomial* pick_reducer(const Monomial& m, const std::vector<Binomial>& G,
                             const std::vector<size_t>& order) {
    for (size_t i : order) {
        if (divides(G[i].lead(), m)) {
            return &G[i];
        }
    }
    return nullptr;
}

}  // namespace

std::optional<Binomial> nf_ordinary(const Binomial& h, const std::vector<Binomial>& G,
                                    const MonomialOrder& ord) {
    auto order = reducer_order(G, ord);
    std::optional<Binomial> cur = h;
    while (const Binomial* g = pick_reducer(cur->lead(), G, order)) {
        cur = Binomial::orient(reduce_term(cur->lead(), *g), cur->tail(), ord);
        if (!cur.has_value()) {
            return std::nullopt;
        }
    }
    while (const Binomial* g = pick_reducer(cur->tail(), G, order)) {
        cur = Binomial::orient(cur->lead(), reduce_term(cur->tail(), *g), ord);
    }
    return cur;
}

std::vector<Binomial> buchberger(const std::vector<Binomial>& F, const MonomialOrder& ord) {
    std::vector<Binomial> G;
    G.reserve(F.size());
    for (const Binomial& f : F) {
        G.push_back(*Binomial::orient(f.lead(), f.tail(), ord));
    }
    struct Pair {
        int64_t deg;
        Monomial lcm;
        size_t i, j;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        auto c = ord.compare(a.lcm, b.lcm);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };
    std::vector<Pair> queue;
    std::set<std::pair<size_t, size_t>> treated;
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            Monomial L = lcm(G[i].lead(), G[j].lead());
            queue.push_back({L.total_degree(), std::move(L), i, j});
        }
        std::sort(queue.begin(), queue.end(), pair_less);
    };
    for (size_t j = 1; j < G.size(); ++j) {
        push_pairs(j);
    }
    while (!queue.empty()) {
        Pair p = queue.front();
        queue.erase(queue.begin());
        treated.insert({p.i, p.j});
        if (coprime(G[p.i].lead(), G[p.j].lead())) {
            continue;
        }
        bool chained = false;
        for (size_t k = 0; k < G.size() && !chained; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!divides(G[k].lead(), p.lcm)) continue;
            auto key = [](size_t a, size_t b) {
                return std::pair<size_t, size_t>{std::min(a, b), std::max(a, b)};
            };
            if (treated.count(key(p.i, k)) && treated.count(key(k, p.j))) {
                chained = true;
            }
        }
        if (chained) {
            continue;
        }
        auto s = spoly(G[p.i], G[p.j], ord);
        if (!s.has_value()) {
            continue;
        }
        auto h = nf_ordinary(*s, G, ord);
        if (!h.has_value()) {
            continue;
        }
        G.push_back(*h);
        push_pairs(G.size() - 1);
    }
    return G;
}

std::vector<Binomial> autoreduce(const std::vector<Binomial>& G, const MonomialOrder& ord) {
    // Minimal leads: drop any member whose lead another surviving member's
    // lead divides; among equal leads keep one.
    std::vector<size_t> idx(G.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return ord.less(G[a].lead(), G[b].lead()); });
    std::vector<Binomial> minimal;
    for (size_t i : idx) {
        bool covered = false;
        for (const Binomial& f : minimal) {
            if (divides(f.lead(), G[i].lead())) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            minimal.push_back(G[i]);
        }
    }
    // Tails to normal form; a minimal member's lead is never reducible by
    // the others, so nothing vanishes here.
    std::vector<Binomial> out;
    out.reserve(minimal.size());
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Binomial> others;
        others.reserve(minimal.size() - 1);
        for (size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        auto r = nf_ordinary(minimal[i], others, ord);
        if (!r.has_value() || !(r->lead() == minimal[i].lead())) {
            throw Error("autoreduce: input was not a Groebner basis");
        }
        out.push_back(*r);
    }
    return out;
}

bool ideal_equal(const std::vector<Binomial>& F, const std::vector<Binomial>& G,
                 const MonomialOrder& ord) {
    auto rf = autoreduce(buchberger(F, ord), ord);
    auto rg = autoreduce(buchberger(G, ord), ord);
    return rf == rg;
}

}  // namespace janet
