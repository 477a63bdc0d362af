#include "logfield/calculus.hpp"

#include <map>
#include <set>

namespace logfield {

namespace {

class DerivativeProducer : public Producer {
public:
    explicit DerivativeProducer(Series parent) : parent_(std::move(parent)) {}

    Pull next(Workspace& ws) override {
        if (!source_done_) {
            Term t;
            switch (parent_.try_term(idx_, ws, t)) {
            case Avail::available:
                ++idx_;
                for (const auto& [c, dm] : mono_derivative(t.mono)) {
                    Scalar coeff = Scalar(c) * t.coeff;
                    auto [it, fresh] = pending_.try_emplace(dm, coeff);
                    if (!fresh) {
                        it->second += coeff;
                        if (it->second.is_zero()) pending_.erase(it);
                    }
                }
                break;
            case Avail::pending:
                break;
            case Avail::exhausted:
                source_done_ = true;
                break;
            }
        }
        if (pending_.empty()) return source_done_ ? Pull::exhausted() : Pull::progressed();
        if (!source_done_) {
            TailBound tb = parent_.tail_bound(idx_);
            if (tb.maybe_more) {
                // a future source term at or above the pending maximum could
                // still contribute to it (its exp multiplier is 1)
                if (!tb.at_most || !(*tb.at_most < pending_.begin()->first)) return Pull::progressed();
            }
        }
        auto node = pending_.extract(pending_.begin());
        return Pull::yielded({std::move(node.mapped()), node.key()});
    }

    std::optional<Monomial> ceiling() const override {
        std::optional<Monomial> out;
        if (!pending_.empty()) out = pending_.begin()->first;
        if (!source_done_) {
            TailBound tb = parent_.tail_bound(idx_);
            if (tb.maybe_more) {
                if (!tb.at_most) return std::nullopt;
                if (!out || *tb.at_most > *out) out = tb.at_most;
            }
        }
        return out;
    }

    GridCertificate certificate() const override {
        GridCertificate src = parent_.certificate();
        std::set<Level> levels;
        for (const auto& b : src.bases)
            for (const auto& [l, e] : b.exponents()) levels.insert(l);
        for (const auto& g : src.generators)
            for (const auto& [l, e] : g.exponents()) levels.insert(l);
        GridCertificate out;
        out.generators = src.generators;
        for (Level l : levels) {
            Monomial mult = Monomial::one();
            for (Level j = 0; j <= l; ++j) mult = mult.times(Monomial::factor(j, Rational(-1)));
            for (const auto& b : src.bases) out.bases.push_back(b.times(mult));
        }
        out.normalize();
        return out;
    }

private:
    Series parent_;
    std::size_t idx_ = 0;
    bool source_done_ = false;
    std::map<Monomial, Scalar, std::greater<Monomial>> pending_;
};

} // namespace

Series derivative(const Series& f) { return Series(std::make_unique<DerivativeProducer>(f)); }

Series nth_derivative(const Series& f, std::size_t i) {
    Series out = f;
    for (std::size_t k = 0; k < i; ++k) out = derivative(out);
    return out;
}

} // namespace logfield
