#include "janet/order.hpp"

#include <utility>

#include "janet/errors.hpp"

namespace janet {

// Implementations compare over a variable window [lo, hi] so that block
// orders can delegate to sub-orders; weight vectors are indexed relative
// to the window start.
class MonomialOrder::Impl {
public:
    virtual ~Impl() = default;
    virtual int ambient() const = 0;
    virtual std::strong_ordering compare_range(const Monomial& u, const Monomial& v,
                                               VarIndex lo, VarIndex hi) const = 0;
};

namespace {

class LexImpl final : public MonomialOrder::Impl {
public:
    explicit LexImpl(int ambient) : ambient_(ambient) {}

    int ambient() const override { return ambient_; }

    std::strong_ordering compare_range(const Monomial& u, const Monomial& v,
                                       VarIndex lo, VarIndex hi) const override {
        auto a = u.entries().begin(), ae = u.entries().end();
        auto b = v.entries().begin(), be = v.entries().end();
        while (a != ae && a->var < lo) ++a;
        while (b != be && b->var < lo) ++b;
        while ((a != ae && a->var <= hi) || (b != be && b->var <= hi)) {
            VarIndex va = (a != ae && a->var <= hi) ? a->var : hi + 1;
            VarIndex vb = (b != be && b->var <= hi) ? b->var : hi + 1;
            if (va < vb) return std::strong_ordering::greater;
            if (vb < va) return std::strong_ordering::less;
            if (a->deg != b->deg) return a->deg <=> b->deg;
            ++a;
            ++b;
        }
        return std::strong_ordering::equal;
    }

private:
    int ambient_;
};

class DegrevlexImpl final : public MonomialOrder::Impl {
public:
    explicit DegrevlexImpl(int ambient) : ambient_(ambient) {}

    int ambient() const override { return ambient_; }

    std::strong_ordering compare_range(const Monomial& u, const Monomial& v,
                                       VarIndex lo, VarIndex hi) const override {
        int64_t du = u.total_degree_range(lo, hi);
        int64_t dv = v.total_degree_range(lo, hi);
        if (du != dv) return du <=> dv;
        // Equal degree: at the last differing variable, the smaller
        // exponent belongs to the greater monomial.
        auto a = u.entries().rbegin(), ae = u.entries().rend();
        auto b = v.entries().rbegin(), be = v.entries().rend();
        while (a != ae && a->var > hi) ++a;
        while (b != be && b->var > hi) ++b;
        while ((a != ae && a->var >= lo) || (b != be && b->var >= lo)) {
            VarIndex va = (a != ae && a->var >= lo) ? a->var : lo - 1;
            VarIndex vb = (b != be && b->var >= lo) ? b->var : lo - 1;
            if (va > vb) return std::strong_ordering::less;
            if (vb > va) return std::strong_ordering::greater;
            if (a->deg != b->deg) return b->deg <=> a->deg;
            ++a;
            ++b;
        }
        return std::strong_ordering::equal;
    }

private:
    int ambient_;
};

class WeightImpl final : public MonomialOrder::Impl {
public:
    WeightImpl(std::vector<int64_t> c, std::shared_ptr<const MonomialOrder::Impl> tiebreak)
        : c_(std::move(c)), tiebreak_(std::move(tiebreak)) {
        for (int64_t w : c_) {
            if (w < 0) throw InputError("negative weight");
        }
        if (tiebreak_->ambient() != static_cast<int>(c_.size())) {
            throw InputError("weight tiebreak ambient mismatch");
        }
    }

    int ambient() const override { return static_cast<int>(c_.size()); }

    std::strong_ordering compare_range(const Monomial& u, const Monomial& v,
                                       VarIndex lo, VarIndex hi) const override {
        int64_t wu = cost(u, lo, hi);
        int64_t wv = cost(v, lo, hi);
        if (wu != wv) return wu <=> wv;
        return tiebreak_->compare_range(u, v, lo, hi);
    }

private:
    int64_t cost(const Monomial& m, VarIndex lo, VarIndex hi) const {
        int64_t s = 0;
        for (const VarDeg& e : m.entries()) {
            if (e.var < lo || e.var > hi) continue;
            s = checked_add(s, checked_mul(c_[static_cast<size_t>(e.var - lo)], e.deg));
        }
        return s;
    }

    std::vector<int64_t> c_;
    std::shared_ptr<const MonomialOrder::Impl> tiebreak_;
};

class BlockImpl final : public MonomialOrder::Impl {
public:
    BlockImpl(int split, std::shared_ptr<const MonomialOrder::Impl> left,
              std::shared_ptr<const MonomialOrder::Impl> right)
        : split_(split), left_(std::move(left)), right_(std::move(right)) {
        if (split < 1) throw InputError("block split must be positive");
        if (left_->ambient() != split) {
            throw InputError("block left ambient must equal split");
        }
    }

    int ambient() const override { return split_ + right_->ambient(); }

    std::strong_ordering compare_range(const Monomial& u, const Monomial& v,
                                       VarIndex lo, VarIndex hi) const override {
        VarIndex mid = lo + split_ - 1;
        if (auto c = left_->compare_range(u, v, lo, mid); c != std::strong_ordering::equal) {
            return c;
        }
        return right_->compare_range(u, v, mid + 1, hi);
    }

private:
    int split_;
    std::shared_ptr<const MonomialOrder::Impl> left_;
    std::shared_ptr<const MonomialOrder::Impl> right_;
};

}  // namespace

MonomialOrder::MonomialOrder(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

int MonomialOrder::ambient() const { return impl_->ambient(); }

std::strong_ordering MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
    if (u.ambient() != impl_->ambient() || v.ambient() != impl_->ambient()) {
        throw InputError("order ambient mismatch");
    }
    return impl_->compare_range(u, v, 1, impl_->ambient());
}

MonomialOrder MonomialOrder::lex(int ambient) {
    return MonomialOrder(std::make_shared<LexImpl>(ambient));
}

MonomialOrder MonomialOrder::degrevlex(int ambient) {
    return MonomialOrder(std::make_shared<DegrevlexImpl>(ambient));
}

MonomialOrder MonomialOrder::weight(std::vector<int64_t> c) {
    int n = static_cast<int>(c.size());
    return weight(std::move(c), degrevlex(n));
}

MonomialOrder MonomialOrder::weight(std::vector<int64_t> c, MonomialOrder tiebreak) {
    return MonomialOrder(std::make_shared<WeightImpl>(std::move(c), tiebreak.impl_));
}

MonomialOrder MonomialOrder::block(int split, MonomialOrder left, MonomialOrder right) {
    return MonomialOrder(std::make_shared<BlockImpl>(split, left.impl_, right.impl_));
}

}  // namespace janet
