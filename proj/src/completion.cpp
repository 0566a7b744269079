#include "janet/completion.hpp"

#include <algorithm>
#include <bit>

#include "janet/errors.hpp"

namespace janet {

bool criterion1(const Monomial& anc_f, const Monomial& anc_g, const Monomial& lm_f) {
    return divides(mul(anc_f, anc_g), lm_f);
}

bool criterion2(const Monomial& anc_f, const Monomial& anc_g, const Monomial& lm_f) {
    return lcm(anc_f, anc_g).total_degree() < lm_f.total_degree();
}

namespace {

int common_ambient(const std::vector<Binomial>& F) {
    if (F.empty()) {
        return 1;
    }
    int n = F[0].ambient();
    for (const Binomial& f : F) {
        if (f.ambient() != n) {
            throw InputError("ambient mismatch in generating set");
        }
    }
    return n;
}

bool quick_divides(const Monomial& d, const Monomial& m) {
    return d.total_degree() <= m.total_degree() && divides(d, m);
}

// Inputs may carry an orientation from a different order.
std::vector<Binomial> orient_all(const std::vector<Binomial>& F, const MonomialOrder& ord) {
    std::vector<Binomial> out;
    out.reserve(F.size());
    for (const Binomial& f : F) {
        out.push_back(*Binomial::orient(f.lead(), f.tail(), ord));
    }
    return out;
}

}  // namespace

CompletionState::CompletionState(const std::vector<Binomial>& F, MonomialOrder ord,
                                 CompletionOptions opts)
    : ord_(std::move(ord)),
      opts_(std::move(opts)),
      tree_(common_ambient(F)),
      queue_(QKeyLess{ord_}) {
    if (tree_.ambient() > 64) {
        throw InputError("completion supports at most 64 variables");
    }
    if (F.empty()) {
        return;
    }
    std::vector<Binomial> fs = orient_all(F, ord_);
    size_t best = 0;
    for (size_t i = 1; i < fs.size(); ++i) {
        if (ord_.less(fs[i].lead(), fs[best].lead())) {
            best = i;
        }
    }
    Monomial seed_lm = fs[best].lead();
    uint32_t seed = alloc_slot(Triple{std::move(fs[best]), std::move(seed_lm), 0});
    tree_.insert(pool_[seed].triple->bin.lead(), seed);
    t_list_.push_back(seed);
    emit(TraceEvent::Kind::Insert, pool_[seed].triple->bin);
    after_mutation(seed);
    for (size_t i = 0; i < fs.size(); ++i) {
        if (i != best) {
            Monomial lm = fs[i].lead();
            enqueue_reduced(Triple{std::move(fs[i]), std::move(lm), 0});
        }
    }
    if (opts_.validate_each_step) {
        validate();
    }
}

void CompletionState::emit(TraceEvent::Kind kind, const std::optional<Binomial>& bin) {
    if (opts_.trace) {
        opts_.trace(TraceEvent{kind, iteration_, bin});
    }
}

uint32_t CompletionState::alloc_slot(Triple f) {
    uint32_t idx;
    if (!free_slots_.empty()) {
        idx = free_slots_.back();
        free_slots_.pop_back();
    } else {
        idx = static_cast<uint32_t>(pool_.size());
        pool_.emplace_back();
    }
    pool_[idx].triple = std::move(f);
    pool_[idx].nm = 0;
    return idx;
}

void CompletionState::free_slot(uint32_t idx) {
    pool_[idx].triple.reset();
    pool_[idx].nm = 0;
    free_slots_.push_back(idx);
}

Monomial CompletionState::tail_normal_form(Monomial t) const {
    while (auto hit = tree_.find(t)) {
        t = reduce_term(t, pool_[*hit].triple->bin);
    }
    return t;
}

CompletionState::NfResult CompletionState::normal_form(const Triple& f) const {
    Binomial h = f.bin;
    bool original_head = true;
    for (;;) {
        auto hit = tree_.find(h.lead());
        if (!hit.has_value()) {
            break;
        }
        const Triple& g = *pool_[*hit].triple;
        if (original_head && !(h.lead() == f.anc)) {
            if (criterion1(f.anc, g.anc, h.lead()) || criterion2(f.anc, g.anc, h.lead())) {
                return {std::nullopt, true};
            }
        }
        original_head = false;
        auto oh = Binomial::orient(reduce_term(h.lead(), g.bin), h.tail(), ord_);
        if (!oh.has_value()) {
            return {std::nullopt, false};
        }
        h = *oh;
    }
    Monomial t = tail_normal_form(h.tail());
    if (!(t == h.tail())) {
        h = *Binomial::orient(h.lead(), t, ord_);
    }
    return {h, false};
}

void CompletionState::enqueue_reduced(Triple f) {
    NfResult r = normal_form(f);
    if (!r.val.has_value()) {
        emit(r.by_criterion ? TraceEvent::Kind::CriterionDrop : TraceEvent::Kind::ZeroDrop,
             f.bin);
        return;
    }
    if (r.val->lead() == f.bin.lead()) {
        f.bin = *r.val;
    } else {
        f = Triple{*r.val, r.val->lead(), 0};
    }
    Monomial key = f.bin.lead();
    queue_.emplace(QKey{std::move(key), seq_++}, std::move(f));
}

void CompletionState::enqueue_raw(Triple f) {
    Monomial key = f.bin.lead();
    queue_.emplace(QKey{std::move(key), seq_++}, std::move(f));
}

bool CompletionState::step() {
    if (queue_.empty()) {
        return false;
    }
    ++iteration_;
    auto it = queue_.begin();
    Triple p = std::move(it->second);
    queue_.erase(it);
    emit(TraceEvent::Kind::Pop, p.bin);

    bool mutated = false;
    if (p.bin.lead() == p.anc) {
        // A new head enters: members above it go back to the queue so the
        // final basis stays minimal.
        std::vector<uint32_t> victims;
        for (uint32_t i : t_list_) {
            if (ord_.greater(pool_[i].triple->bin.lead(), p.bin.lead())) {
                victims.push_back(i);
            }
        }
        if (!victims.empty()) {
            mutated = true;
            for (uint32_t i : victims) {
                tree_.remove(pool_[i].triple->bin.lead());
                emit(TraceEvent::Kind::Displace, pool_[i].triple->bin);
                enqueue_raw(std::move(*pool_[i].triple));
                free_slot(i);
            }
            std::sort(victims.begin(), victims.end());
            std::erase_if(t_list_, [&](uint32_t i) {
                return std::binary_search(victims.begin(), victims.end(), i);
            });
        }
        // Removals widen the survivors' cones, so the full normal form is
        // due here; the head itself can fall to it.
        NfResult r = normal_form(p);
        if (!r.val.has_value()) {
            emit(TraceEvent::Kind::ZeroDrop, p.bin);
            if (mutated) {
                after_mutation(std::nullopt);
            }
            if (opts_.validate_each_step) {
                validate();
            }
            return true;
        }
        if (r.val->lead() == p.bin.lead()) {
            p.bin = *r.val;
        } else {
            p = Triple{*r.val, r.val->lead(), 0};
        }
    }

    uint32_t fresh = alloc_slot(std::move(p));
    tree_.insert(pool_[fresh].triple->bin.lead(), fresh);
    t_list_.push_back(fresh);
    emit(TraceEvent::Kind::Insert, pool_[fresh].triple->bin);
    after_mutation(fresh);
    if (opts_.validate_each_step) {
        validate();
    }
    return true;
}

void CompletionState::after_mutation(std::optional<uint32_t> fresh) {
    mask_pairs_.clear();
    tree_.collect_nm_masks(mask_pairs_);
    std::vector<uint64_t> new_masks(pool_.size(), 0);
    for (const auto& [payload, mask] : mask_pairs_) {
        new_masks[payload] = mask;
    }

    // Leads whose Janet cone may cover terms it did not cover before: the
    // fresh member, plus members that lost nonmultiplicative variables.
    std::vector<Monomial> hints;
    if (fresh.has_value()) {
        hints.push_back(pool_[*fresh].triple->bin.lead());
    }
    for (uint32_t i : t_list_) {
        if (fresh.has_value() && i == *fresh) {
            continue;
        }
        if (pool_[i].nm & ~new_masks[i]) {
            hints.push_back(pool_[i].triple->bin.lead());
        }
    }

    if (!hints.empty()) {
        // Keep basis tails in normal form.
        for (uint32_t i : t_list_) {
            if (fresh.has_value() && i == *fresh) {
                continue;
            }
            const Monomial& tail = pool_[i].triple->bin.tail();
            bool touched = false;
            for (const Monomial& hint : hints) {
                if (quick_divides(hint, tail)) {
                    touched = true;
                    break;
                }
            }
            if (!touched) {
                continue;
            }
            Monomial nt = tail_normal_form(tail);
            if (!(nt == tail)) {
                pool_[i].triple->bin =
                    *Binomial::orient(pool_[i].triple->bin.lead(), nt, ord_);
                emit(TraceEvent::Kind::TailUpdate, pool_[i].triple->bin);
            }
        }
        // Renormalize the queued elements the change can reach.
        std::vector<QKey> affected;
        for (const auto& [key, t] : queue_) {
            for (const Monomial& hint : hints) {
                if (quick_divides(hint, t.bin.lead()) || quick_divides(hint, t.bin.tail())) {
                    affected.push_back(key);
                    break;
                }
            }
        }
        for (const QKey& key : affected) {
            auto it = queue_.find(key);
            Triple t = std::move(it->second);
            NfResult r = normal_form(t);
            if (!r.val.has_value()) {
                queue_.erase(it);
                emit(r.by_criterion ? TraceEvent::Kind::CriterionDrop
                                    : TraceEvent::Kind::ZeroDrop,
                     t.bin);
                continue;
            }
            if (r.val->lead() == t.bin.lead()) {
                t.bin = *r.val;
                it->second = std::move(t);
            } else {
                queue_.erase(it);
                emit(TraceEvent::Kind::Requeue, *r.val);
                enqueue_raw(Triple{*r.val, r.val->lead(), 0});
            }
        }
    }

    // Prolongations for newly nonmultiplicative variables; nmp is pruned
    // first so a variable that later re-enters the cone is re-examined.
    for (uint32_t i : t_list_) {
        Slot& s = pool_[i];
        uint64_t nm = new_masks[i];
        s.triple->nmp &= nm;
        uint64_t todo = nm & ~s.triple->nmp;
        while (todo != 0) {
            int b = std::countr_zero(todo);
            todo &= todo - 1;
            s.triple->nmp |= uint64_t{1} << b;
            enqueue_reduced(
                Triple{mul_var(s.triple->bin, b + 1), s.triple->anc, 0});
        }
        s.nm = nm;
    }
}

std::vector<Triple> CompletionState::basis_triples() const {
    std::vector<Triple> out;
    out.reserve(t_list_.size());
    for (uint32_t i : t_list_) {
        out.push_back(*pool_[i].triple);
    }
    std::sort(out.begin(), out.end(), [&](const Triple& a, const Triple& b) {
        return ord_.less(a.bin.lead(), b.bin.lead());
    });
    return out;
}

std::vector<Binomial> CompletionState::basis() const {
    std::vector<Binomial> out;
    out.reserve(t_list_.size());
    for (const Triple& t : basis_triples()) {
        out.push_back(t.bin);
    }
    return out;
}

void CompletionState::run() {
    while (step()) {
    }
}

void CompletionState::validate() const {
    tree_.check_invariants();
    if (tree_.size() != t_list_.size()) {
        throw Error("engine: tree size disagrees with member list");
    }
    std::vector<Monomial> U;
    U.reserve(t_list_.size());
    for (uint32_t i : t_list_) {
        U.push_back(pool_[i].triple->bin.lead());
    }
    auto nm = nm_vars(U);
    for (size_t k = 0; k < t_list_.size(); ++k) {
        uint32_t i = t_list_[k];
        uint64_t mask = 0;
        for (VarIndex v : nm[k]) {
            mask |= uint64_t{1} << (v - 1);
        }
        if (mask != pool_[i].nm) {
            throw Error("engine: stale nonmultiplicative mask");
        }
        if (pool_[i].triple->nmp & ~mask) {
            throw Error("engine: prolonged variables exceed the nonmultiplicative set");
        }
        if (!divides(pool_[i].triple->anc, pool_[i].triple->bin.lead())) {
            throw Error("engine: ancestor does not divide the lead");
        }
        auto self = tree_.find(pool_[i].triple->bin.lead());
        if (!self.has_value() || *self != i) {
            throw Error("engine: basis lead is not its own divisor");
        }
        if (!(tail_normal_form(pool_[i].triple->bin.tail()) == pool_[i].triple->bin.tail())) {
            throw Error("engine: stale basis tail");
        }
    }
    for (const auto& [key, t] : queue_) {
        if (!(key.lm == t.bin.lead())) {
            throw Error("engine: queue key disagrees with lead");
        }
        if (!divides(t.anc, t.bin.lead())) {
            throw Error("engine: queued ancestor does not divide the lead");
        }
        NfResult r = normal_form(t);
        if (!r.val.has_value() || !(*r.val == t.bin)) {
            throw Error("engine: queue element not in normal form");
        }
    }
}

std::vector<Binomial> binomial_janet_basis(const std::vector<Binomial>& F,
                                           const MonomialOrder& ord,
                                           const CompletionOptions& opts) {
    CompletionState st(F, ord, opts);
    st.run();
    return st.basis();
}

namespace {

struct BasisView {
    JanetTree tree;
    const std::vector<Binomial>& G;

    BasisView(const std::vector<Binomial>& g) : tree(common_ambient(g)), G(g) {
        for (size_t i = 0; i < G.size(); ++i) {
            tree.insert(G[i].lead(), i);
        }
    }
};

std::optional<Binomial> nf_plain(Binomial h, const BasisView& v, const MonomialOrder& ord) {
    while (auto hit = v.tree.find(h.lead())) {
        auto oh = Binomial::orient(reduce_term(h.lead(), v.G[*hit]), h.tail(), ord);
        if (!oh.has_value()) {
            return std::nullopt;
        }
        h = *oh;
    }
    Monomial t = h.tail();
    while (auto hit = v.tree.find(t)) {
        t = reduce_term(t, v.G[*hit]);
    }
    if (t == h.tail()) {
        return h;
    }
    return *Binomial::orient(h.lead(), t, ord);
}

}  // namespace

bool is_janet_basis(const std::vector<Binomial>& G0, const MonomialOrder& ord) {
    if (G0.empty()) {
        return true;
    }
    std::vector<Binomial> G = orient_all(G0, ord);
    for (size_t i = 0; i < G.size(); ++i) {
        for (size_t j = i + 1; j < G.size(); ++j) {
            if (G[i].lead() == G[j].lead()) {
                return false;
            }
        }
    }
    BasisView view(G);
    std::vector<std::pair<size_t, uint64_t>> masks;
    view.tree.collect_nm_masks(masks);
    for (const auto& [i, mask] : masks) {
        uint64_t todo = mask;
        while (todo != 0) {
            int b = std::countr_zero(todo);
            todo &= todo - 1;
            if (nf_plain(mul_var(G[i], b + 1), view, ord).has_value()) {
                return false;
            }
        }
    }
    return true;
}

std::optional<Binomial> janet_normal_form(const Binomial& f, const std::vector<Binomial>& G0,
                                          const MonomialOrder& ord) {
    if (G0.empty()) {
        return f;
    }
    std::vector<Binomial> G = orient_all(G0, ord);
    BasisView view(G);
    return nf_plain(*Binomial::orient(f.lead(), f.tail(), ord), view, ord);
}

Monomial monomial_normal_form(const Monomial& w, const std::vector<Binomial>& G0,
                              const MonomialOrder& ord,
                              const std::function<void(const Monomial&)>& step) {
    if (G0.empty()) {
        return w;
    }
    std::vector<Binomial> G = orient_all(G0, ord);
    BasisView view(G);
    Monomial m = w;
    while (auto hit = view.tree.find(m)) {
        m = reduce_term(m, view.G[*hit]);
        if (step) {
            step(m);
        }
    }
    return m;
}

}  // namespace janet
