#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "janet/binomial.hpp"
#include "janet/janet_tree.hpp"
#include "janet/monomial.hpp"
#include "janet/order.hpp"

namespace janet {

// A basis candidate with its completion history: `anc` is the lead of the
// element it descends from by nonmultiplicative prolongations (its own
// lead if none), `nmp` the variables already prolonged, as a bitmask.
struct Triple {
    Binomial bin;
    Monomial anc;
    uint64_t nmp = 0;
};

struct TraceEvent {
    enum class Kind {
        Pop,            // taken from the queue for insertion
        Insert,         // entered the basis
        Displace,       // moved back from basis to queue
        ZeroDrop,       // normal form vanished
        CriterionDrop,  // discarded by an involutive criterion
        Requeue,        // head reduced while queued; reset and requeued
        TailUpdate,     // basis member's tail renormalized
    };
    Kind kind;
    size_t iteration;
    std::optional<Binomial> bin;
};

struct CompletionOptions {
    std::function<void(const TraceEvent&)> trace;
    // Re-derive every internal invariant after each step (slow; tests).
    bool validate_each_step = false;
};

// Buchberger-style discard conditions for a queued element f whose lead
// has Janet divisor g.
bool criterion1(const Monomial& anc_f, const Monomial& anc_g, const Monomial& lm_f);
bool criterion2(const Monomial& anc_f, const Monomial& anc_g, const Monomial& lm_f);

// Completion of a binomial generating set to the minimal Janet basis.
// Queued elements are kept in Janet normal form against the current basis
// incrementally: they are reduced on arrival and again whenever a basis
// change can touch them (a new member whose lead divides one of their
// terms, or a member whose multiplicative cone widened after a
// displacement). Basis tails are renormalized the same way, so the
// output comes out fully autoreduced.
class CompletionState {
public:
    CompletionState(const std::vector<Binomial>& F, MonomialOrder ord,
                    CompletionOptions opts = {});

    // One queue pop with all bookkeeping; false once the queue is empty.
    bool step();
    void run();
    bool done() const { return queue_.empty(); }

    size_t iterations() const { return iteration_; }
    size_t queue_size() const { return queue_.size(); }
    size_t basis_size() const { return t_list_.size(); }

    // Basis triples, ascending by lead.
    std::vector<Triple> basis_triples() const;
    std::vector<Binomial> basis() const;

    // Structural self-check against definitional recomputation; throws on
    // violation. Cost grows quadratically with the basis.
    void validate() const;

private:
    struct NfResult {
        std::optional<Binomial> val;
        bool by_criterion = false;
    };
    struct Slot {
        std::optional<Triple> triple;
        uint64_t nm = 0;
    };
    struct QKey {
        Monomial lm;
        uint64_t seq;
    };
    struct QKeyLess {
        MonomialOrder ord;
        bool operator()(const QKey& a, const QKey& b) const {
            auto c = ord.compare(a.lm, b.lm);
            if (c != std::strong_ordering::equal) {
                return c == std::strong_ordering::less;
            }
            return a.seq < b.seq;
        }
    };

    NfResult normal_form(const Triple& f) const;
    Monomial tail_normal_form(Monomial t) const;
    void enqueue_reduced(Triple f);
    void enqueue_raw(Triple f);
    uint32_t alloc_slot(Triple f);
    void free_slot(uint32_t idx);
    void after_mutation(std::optional<uint32_t> fresh);
    void emit(TraceEvent::Kind kind, const std::optional<Binomial>& bin);

    MonomialOrder ord_;
    CompletionOptions opts_;
    JanetTree tree_;
    std::vector<Slot> pool_;
    std::vector<uint32_t> free_slots_;
    std::vector<uint32_t> t_list_;
    std::map<QKey, Triple, QKeyLess> queue_;
    uint64_t seq_ = 0;
    size_t iteration_ = 0;
    // Scratch reused between iterations.
    std::vector<std::pair<size_t, uint64_t>> mask_pairs_;
};

// Convenience wrapper over CompletionState.
std::vector<Binomial> binomial_janet_basis(const std::vector<Binomial>& F,
                                           const MonomialOrder& ord,
                                           const CompletionOptions& opts = {});

// Definitional check: every nonmultiplicative prolongation of every
// member reduces to zero. Duplicate leads disqualify immediately.
bool is_janet_basis(const std::vector<Binomial>& G, const MonomialOrder& ord);

// Janet normal form of a binomial against an arbitrary distinct-lead set;
// absent when it vanishes.
std::optional<Binomial> janet_normal_form(const Binomial& f, const std::vector<Binomial>& G,
                                          const MonomialOrder& ord);

// Janet-rewrites a monomial to its normal form; `step` observes each
// intermediate monomial.
Monomial monomial_normal_form(const Monomial& w, const std::vector<Binomial>& G,
                              const MonomialOrder& ord,
                              const std::function<void(const Monomial&)>& step = nullptr);

}  // namespace janet
