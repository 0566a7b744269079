#include "janet/janet_tree.hpp"

#include <algorithm>
#include <map>

#include "janet/errors.hpp"

namespace janet {

JanetTree::JanetTree(int ambient) : ambient_(ambient) {
    if (ambient < 1) {
        throw InputError("tree ambient must be positive");
    }
    root_ = alloc_node(1, 0);
}

int32_t JanetTree::alloc_node(VarIndex var, int64_t deg) {
    int32_t idx;
    if (!free_nodes_.empty()) {
        idx = free_nodes_.back();
        free_nodes_.pop_back();
        nodes_[static_cast<size_t>(idx)] = Node{};
    } else {
        idx = static_cast<int32_t>(nodes_.size());
        nodes_.emplace_back();
    }
    nodes_[static_cast<size_t>(idx)].var = var;
    nodes_[static_cast<size_t>(idx)].deg = deg;
    return idx;
}

void JanetTree::free_node(int32_t idx) {
    nodes_[static_cast<size_t>(idx)] = Node{};
    free_nodes_.push_back(idx);
}

int32_t JanetTree::alloc_entry(Monomial lm, size_t payload) {
    int32_t idx;
    if (!free_entries_.empty()) {
        idx = free_entries_.back();
        free_entries_.pop_back();
    } else {
        idx = static_cast<int32_t>(entry_pool_.size());
        entry_pool_.emplace_back();
    }
    entry_pool_[static_cast<size_t>(idx)] = Entry{std::move(lm), payload};
    return idx;
}

void JanetTree::free_entry(int32_t idx) {
    entry_pool_[static_cast<size_t>(idx)] = Entry{};
    free_entries_.push_back(idx);
}

void JanetTree::insert(const Monomial& lm, size_t payload) {
    if (lm.ambient() != ambient_) {
        throw InputError("tree ambient mismatch");
    }
    insert_into_chain(-1, 1, lm, payload);
    ++size_;
}

void JanetTree::insert_into_chain(int32_t parent, VarIndex v, const Monomial& lm,
                                  size_t payload) {
    int64_t d = lm.deg(v);
    int32_t head = head_of(parent);
    if (head < 0) {
        int32_t idx = alloc_node(v, d);
        set_head(parent, idx);
        place(idx, v, lm, payload);
        return;
    }
    int32_t prev = -1;
    int32_t cur = head;
    while (cur >= 0 && nodes_[static_cast<size_t>(cur)].deg < d) {
        prev = cur;
        cur = nodes_[static_cast<size_t>(cur)].ndg;
    }
    if (cur >= 0 && nodes_[static_cast<size_t>(cur)].deg == d) {
        int32_t e = nodes_[static_cast<size_t>(cur)].entry;
        if (e >= 0) {
            Entry& ent = entry_pool_[static_cast<size_t>(e)];
            if (ent.lm == lm) {
                throw InputError("duplicate monomial in tree");
            }
            // A second member joins this degree prefix: the resident moves
            // down. It rested here, so its remaining degrees are all zero.
            Monomial r_lm = std::move(ent.lm);
            size_t r_payload = ent.payload;
            nodes_[static_cast<size_t>(cur)].entry = -1;
            free_entry(e);
            insert_into_chain(cur, v + 1, r_lm, r_payload);
            insert_into_chain(cur, v + 1, lm, payload);
            return;
        }
        if (nodes_[static_cast<size_t>(cur)].nvr >= 0) {
            insert_into_chain(cur, v + 1, lm, payload);
            return;
        }
        place(cur, v, lm, payload);
        return;
    }
    int32_t idx = alloc_node(v, d);
    nodes_[static_cast<size_t>(idx)].ndg = cur;
    if (prev < 0) {
        set_head(parent, idx);
    } else {
        nodes_[static_cast<size_t>(prev)].ndg = idx;
    }
    place(idx, v, lm, payload);
}

void JanetTree::place(int32_t idx, VarIndex v, const Monomial& lm, size_t payload) {
    if (v == ambient_ || lm.total_degree_range(v + 1, ambient_) == 0) {
        nodes_[static_cast<size_t>(idx)].entry = alloc_entry(lm, payload);
    } else {
        insert_into_chain(idx, v + 1, lm, payload);
    }
}

size_t JanetTree::remove(const Monomial& lm) {
    if (lm.ambient() != ambient_) {
        throw InputError("tree ambient mismatch");
    }
    struct Level {
        int32_t parent;
        std::vector<int32_t> chain;
    };
    std::vector<Level> path;
    int32_t parent = -1;
    VarIndex v = 1;
    size_t payload = 0;
    for (;;) {
        int32_t head = head_of(parent);
        if (head < 0) {
            throw InputError("monomial not in tree");
        }
        int64_t d = lm.deg(v);
        Level level{parent, {}};
        int32_t cur = head;
        for (;;) {
            level.chain.push_back(cur);
            if (nodes_[static_cast<size_t>(cur)].deg >= d) break;
            cur = nodes_[static_cast<size_t>(cur)].ndg;
            if (cur < 0) {
                throw InputError("monomial not in tree");
            }
        }
        if (nodes_[static_cast<size_t>(cur)].deg != d) {
            throw InputError("monomial not in tree");
        }
        int32_t e = nodes_[static_cast<size_t>(cur)].entry;
        if (e >= 0 && entry_pool_[static_cast<size_t>(e)].lm == lm) {
            payload = entry_pool_[static_cast<size_t>(e)].payload;
            nodes_[static_cast<size_t>(cur)].entry = -1;
            free_entry(e);
            path.push_back(std::move(level));
            break;
        }
        if (nodes_[static_cast<size_t>(cur)].nvr < 0) {
            throw InputError("monomial not in tree");
        }
        path.push_back(std::move(level));
        parent = cur;
        ++v;
    }
    // Splice now-dead nodes (no member, no descent) off their chains; a
    // head splice that empties the chain can kill the parent in turn.
    for (size_t i = path.size(); i-- > 0;) {
        int32_t idx = path[i].chain.back();
        if (idx == root_) break;
        const Node& nd = nodes_[static_cast<size_t>(idx)];
        if (nd.entry >= 0 || nd.nvr >= 0) break;
        int32_t next = nd.ndg;
        if (path[i].chain.size() >= 2) {
            int32_t prev = path[i].chain[path[i].chain.size() - 2];
            nodes_[static_cast<size_t>(prev)].ndg = next;
            free_node(idx);
            break;
        }
        set_head(path[i].parent, next);
        free_node(idx);
        if (next >= 0) break;
    }
    --size_;
    return payload;
}

std::optional<size_t> JanetTree::find(const Monomial& w) const {
    int visits = 0;
    return find_with_visits(w, visits);
}

std::optional<size_t> JanetTree::find_with_visits(const Monomial& w, int& visits) const {
    if (w.ambient() != ambient_) {
        throw InputError("tree ambient mismatch");
    }
    visits = 1;
    int32_t cur = root_;
    for (;;) {
        const Node* nd = &nodes_[static_cast<size_t>(cur)];
        int64_t dw = w.deg(nd->var);
        if (nd->deg > dw) {
            return std::nullopt;
        }
        while (nd->ndg >= 0 && nodes_[static_cast<size_t>(nd->ndg)].deg <= dw) {
            cur = nd->ndg;
            nd = &nodes_[static_cast<size_t>(cur)];
            ++visits;
        }
        // A chain continuation above marks this variable nonmultiplicative
        // for everything below; any excess degree here is then fatal.
        if (nd->ndg >= 0 && nd->deg < dw) {
            return std::nullopt;
        }
        if (nd->entry >= 0) {
            return entry_pool_[static_cast<size_t>(nd->entry)].payload;
        }
        if (nd->nvr < 0) {
            return std::nullopt;
        }
        cur = nd->nvr;
        ++visits;
    }
}

std::vector<std::pair<Monomial, size_t>> JanetTree::entries() const {
    std::vector<std::pair<Monomial, size_t>> out;
    out.reserve(size_);
    std::vector<int32_t> stack;
    if (root_ >= 0) stack.push_back(root_);
    while (!stack.empty()) {
        int32_t idx = stack.back();
        stack.pop_back();
        const Node& nd = nodes_[static_cast<size_t>(idx)];
        if (nd.entry >= 0) {
            out.push_back({entry_pool_[static_cast<size_t>(nd.entry)].lm,
                           entry_pool_[static_cast<size_t>(nd.entry)].payload});
        }
        if (nd.ndg >= 0) stack.push_back(nd.ndg);
        if (nd.nvr >= 0) stack.push_back(nd.nvr);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return plain_less(a.first, b.first); });
    return out;
}

void JanetTree::collect_nm_masks(std::vector<std::pair<size_t, uint64_t>>& out) const {
    if (ambient_ > 64) {
        throw InputError("nonmultiplicative masks need ambient <= 64");
    }
    struct Frame {
        int32_t idx;
        uint64_t mask;
    };
    std::vector<Frame> stack;
    if (root_ >= 0) stack.push_back({root_, 0});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        const Node& nd = nodes_[static_cast<size_t>(f.idx)];
        uint64_t below = f.mask;
        if (nd.ndg >= 0) {
            below |= uint64_t{1} << (nd.var - 1);
            stack.push_back({nd.ndg, f.mask});
        }
        if (nd.entry >= 0) {
            out.push_back({entry_pool_[static_cast<size_t>(nd.entry)].payload, below});
        }
        if (nd.nvr >= 0) {
            stack.push_back({nd.nvr, below});
        }
    }
}

std::string JanetTree::dump(const std::vector<std::string>& names) const {
    std::string out;
    struct Frame {
        int32_t idx;
        int depth;
    };
    std::vector<Frame> stack;
    if (root_ >= 0) stack.push_back({root_, 0});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        const Node& nd = nodes_[static_cast<size_t>(f.idx)];
        out.append(static_cast<size_t>(2 * f.depth), ' ');
        out += "(" + std::to_string(nd.var) + "," + std::to_string(nd.deg) + ")";
        if (nd.entry >= 0) {
            out += " {" + to_text(entry_pool_[static_cast<size_t>(nd.entry)].lm, names) + "}";
        }
        out += "\n";
        if (nd.ndg >= 0) stack.push_back({nd.ndg, f.depth});
        if (nd.nvr >= 0) stack.push_back({nd.nvr, f.depth + 1});
    }
    return out;
}

void JanetTree::check_invariants() const {
    if (root_ < 0) {
        throw Error("tree invariant: missing root");
    }
    const Node& root = nodes_[static_cast<size_t>(root_)];
    if (root.var != 1 || root.deg != 0) {
        throw Error("tree invariant: root must be (1,0)");
    }
    struct Frame {
        int32_t idx;
        bool is_head;
        std::vector<int64_t> prefix;  // fixed degrees of vars 1..var-1
    };
    size_t found = 0;
    std::vector<Monomial> members;
    std::vector<Frame> stack;
    stack.push_back({root_, true, {}});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        const Node& nd = nodes_[static_cast<size_t>(f.idx)];
        if (nd.var != static_cast<VarIndex>(f.prefix.size()) + 1) {
            throw Error("tree invariant: variable skipped");
        }
        if (nd.var > ambient_ || nd.deg < 0) {
            throw Error("tree invariant: node out of range");
        }
        if (f.idx != root_ && nd.entry < 0 && nd.nvr < 0) {
            throw Error("tree invariant: bare interior node");
        }
        if (nd.entry >= 0 && nd.nvr >= 0) {
            throw Error("tree invariant: member node with descent");
        }
        if (nd.ndg >= 0) {
            const Node& up = nodes_[static_cast<size_t>(nd.ndg)];
            if (up.var != nd.var || up.deg <= nd.deg) {
                throw Error("tree invariant: chain not strictly increasing");
            }
            stack.push_back({nd.ndg, false, f.prefix});
        }
        if (nd.entry >= 0) {
            ++found;
            const Monomial& lm = entry_pool_[static_cast<size_t>(nd.entry)].lm;
            if (lm.ambient() != ambient_) {
                throw Error("tree invariant: member ambient mismatch");
            }
            for (size_t i = 0; i < f.prefix.size(); ++i) {
                if (lm.deg(static_cast<VarIndex>(i + 1)) != f.prefix[i]) {
                    throw Error("tree invariant: member disagrees with path");
                }
            }
            if (lm.deg(nd.var) != nd.deg) {
                throw Error("tree invariant: member disagrees with node degree");
            }
            if (lm.total_degree_range(nd.var + 1, ambient_) != 0) {
                throw Error("tree invariant: member rests above nonzero degrees");
            }
            members.push_back(lm);
        }
        if (nd.nvr >= 0) {
            std::vector<int64_t> prefix = f.prefix;
            prefix.push_back(nd.deg);
            stack.push_back({nd.nvr, true, std::move(prefix)});
        }
    }
    if (found != size_) {
        throw Error("tree invariant: size mismatch");
    }
    std::sort(members.begin(), members.end(),
              [](const Monomial& a, const Monomial& b) { return plain_less(a, b); });
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
        throw Error("tree invariant: duplicate members");
    }
}

std::vector<std::vector<VarIndex>> nm_vars(const std::vector<Monomial>& U) {
    if (U.empty()) {
        return {};
    }
    int n = U[0].ambient();
    for (const Monomial& u : U) {
        if (u.ambient() != n) {
            throw InputError("ambient mismatch in set");
        }
    }
    std::vector<std::vector<VarIndex>> nm(U.size());
    // Refine groups variable by variable: within a group sharing degrees in
    // all earlier variables, the members that miss the maximal degree of
    // the current variable get it as nonmultiplicative.
    std::vector<std::vector<size_t>> groups{std::vector<size_t>(U.size())};
    for (size_t i = 0; i < U.size(); ++i) {
        groups[0][i] = i;
    }
    for (VarIndex v = 1; v <= n; ++v) {
        std::vector<std::vector<size_t>> next;
        for (const auto& group : groups) {
            std::map<int64_t, std::vector<size_t>> by_deg;
            for (size_t i : group) {
                by_deg[U[i].deg(v)].push_back(i);
            }
            int64_t top = by_deg.rbegin()->first;
            for (const auto& [d, idxs] : by_deg) {
                if (d != top) {
                    for (size_t i : idxs) {
                        nm[i].push_back(v);
                    }
                }
                next.push_back(idxs);
            }
        }
        groups = std::move(next);
    }
    for (const auto& group : groups) {
        if (group.size() > 1) {
            throw InputError("duplicate monomial in set");
        }
    }
    return nm;
}

std::optional<size_t> j_divisor_naive(const std::vector<Monomial>& U, const Monomial& w) {
    auto nm = nm_vars(U);
    std::optional<size_t> hit;
    for (size_t i = 0; i < U.size(); ++i) {
        if (!divides(U[i], w)) {
            continue;
        }
        bool ok = true;
        for (VarIndex v : nm[i]) {
            if (U[i].deg(v) != w.deg(v)) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        if (hit.has_value()) {
            throw Error("second Janet divisor found");
        }
        hit = i;
    }
    return hit;
}

}  // namespace janet
