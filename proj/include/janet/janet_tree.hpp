#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "janet/monomial.hpp"

namespace janet {

// Binary search tree over a set of distinct monomials keyed by their
// exponent vectors, variable by variable: `ndg` continues the chain of the
// current variable with the next strictly higher degree present in the
// group, `nvr` descends to the next variable with the current degree
// fixed. Supports Janet-divisor queries in O(n + deg w) node visits, and
// yields each member's nonmultiplicative variables as the set of chain
// continuations along its path.
class JanetTree {
public:
    explicit JanetTree(int ambient);

    int ambient() const { return ambient_; }
    size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    // Inserts a member; duplicates are rejected.
    void insert(const Monomial& lm, size_t payload);

    // Removes a member and returns its payload; absent members are rejected.
    size_t remove(const Monomial& lm);

    // The unique member that Janet-divides w, if any.
    std::optional<size_t> find(const Monomial& w) const;
    std::optional<size_t> find_with_visits(const Monomial& w, int& visits) const;

    // All (member, payload) pairs, ascending by exponent vector.
    std::vector<std::pair<Monomial, size_t>> entries() const;

    // Appends (payload, nonmultiplicative-variable bitmask) for every
    // member; bit v-1 stands for variable position v. Ambient must be <= 64.
    void collect_nm_masks(std::vector<std::pair<size_t, uint64_t>>& out) const;

    // Indented text form: one node per line as (var,deg), members in
    // braces, chain continuations at the same indent, next-variable
    // descents indented below.
    std::string dump(const std::vector<std::string>& names) const;

    // Validates the structural invariants; throws Error on violation.
    void check_invariants() const;

private:
    struct Node {
        VarIndex var = 0;
        int64_t deg = 0;
        int32_t ndg = -1;
        int32_t nvr = -1;
        int32_t entry = -1;
    };

    struct Entry {
        Monomial lm;
        size_t payload = 0;
    };

    int32_t alloc_node(VarIndex var, int64_t deg);
    void free_node(int32_t idx);
    int32_t alloc_entry(Monomial lm, size_t payload);
    void free_entry(int32_t idx);

    int32_t head_of(int32_t parent) const {
        return parent < 0 ? root_ : nodes_[static_cast<size_t>(parent)].nvr;
    }
    void set_head(int32_t parent, int32_t idx) {
        if (parent < 0) {
            root_ = idx;
        } else {
            nodes_[static_cast<size_t>(parent)].nvr = idx;
        }
    }

    void insert_into_chain(int32_t parent, VarIndex v, const Monomial& lm, size_t payload);
    void place(int32_t idx, VarIndex v, const Monomial& lm, size_t payload);

    int ambient_;
    size_t size_ = 0;
    int32_t root_ = -1;
    std::vector<Node> nodes_;
    std::vector<int32_t> free_nodes_;
    std::vector<Entry> entry_pool_;
    std::vector<int32_t> free_entries_;
};

// Nonmultiplicative variables of each member of U, computed from the
// definition by recursive group refinement; ascending variable positions.
std::vector<std::vector<VarIndex>> nm_vars(const std::vector<Monomial>& U);

// Janet divisor of w in U by exhaustive scan; throws if two members
// qualify (impossible for distinct members).
std::optional<size_t> j_divisor_naive(const std::vector<Monomial>& U, const Monomial& w);

}  // namespace janet
