#include "logfield/composition.hpp"

#include <map>

namespace logfield {

Series shift_log(const Series& f) {
    return map_series(
        f, [](const Monomial& m) { return m.shift_levels(1); }, [](const Scalar& c) { return c; },
        [](const GridCertificate& cert) {
            return cert.map_monomials([](const Monomial& m) { return m.shift_levels(1); });
        });
}

namespace {

Term leading_or_raise(const Series& g, Workspace& ws, ErrorKind kind, const char* who) {
    auto lt = g.term_at(0, ws);
    if (!lt) raise(kind, std::string(who) + ": series proven zero");
    return *lt;
}

Series tail_ratio(const Series& g, const Term& lead) {
    return mul_monomial(scalar_mul(lead.coeff.inverse(), suffix(g, 1)), lead.mono.inverse());
}

} // namespace

Series log_of_ws(const Series& g, Workspace& ws) {
    Term lt = leading_or_raise(g, ws, ErrorKind::NonPositiveLeading, "log_of");
    if (lt.coeff.sign() <= 0)
        raise(ErrorKind::NonPositiveLeading, "log_of: leading coefficient " + lt.coeff.to_string());
    std::vector<Term> head;
    for (const auto& [level, e] : lt.mono.exponents())
        head.push_back({Scalar(e), Monomial::factor(level + 1, Rational(1))});
    Scalar c = lt.coeff.log();
    if (!c.is_zero()) head.push_back({c, Monomial::one()});
    return add(from_terms(std::move(head)), compose_ps1(ps1_log(), tail_ratio(g, lt)));
}

Series log_of(const Series& g, const Budget& budget) {
    Workspace ws(budget);
    return log_of_ws(g, ws);
}

namespace {

void require_inf_increasing(const Term& lead, const char* who) {
    if (!(lead.mono.is_large() && lead.coeff.sign() > 0))
        raise(ErrorKind::NotInfIncreasing, std::string(who) + ": leading term " + lead.coeff.to_string() + " * " +
                                               lead.mono.to_string());
}

} // namespace

Series log_iter(const Series& g, unsigned i, const Budget& budget) {
    Workspace ws(budget);
    Series cur = g;
    for (unsigned k = 0; k < i; ++k) {
        Term lt = leading_or_raise(cur, ws, ErrorKind::NotInfIncreasing, "log_iter");
        require_inf_increasing(lt, "log_iter");
        cur = log_of_ws(cur, ws);
    }
    return cur;
}

Series exp_of_ws(const Series& f, Workspace& ws) {
    LogLinearPart part;
    std::size_t idx = 0;
    while (true) {
        auto t = f.term_at(idx, ws);
        if (!t) break;
        if (t->mono.is_large()) {
            const auto& exps = t->mono.exponents();
            auto coeff = t->coeff.as_rational();
            if (exps.size() != 1 || exps[0].first < 0 || exps[0].second != 1 || !coeff)
                raise(ErrorKind::LargePartNotLogLinear,
                      "exp_of: large term " + t->coeff.to_string() + " * " + t->mono.to_string());
            part.coeffs.emplace_back(exps[0].first, *coeff);
            ++idx;
            continue;
        }
        if (t->mono.is_one()) {
            part.constant = t->coeff;
            ++idx;
        }
        break; // everything further is small
    }
    Monomial m = Monomial::one();
    for (const auto& [level, c] : part.coeffs) m = m.times(Monomial::factor(level - 1, c));
    Scalar scale = part.constant.exp();
    return mul_monomial(scalar_mul(scale, compose_ps1(ps1_exp(Rational(1)), suffix(f, idx))), m);
}

Series exp_of(const Series& f, const Budget& budget) {
    Workspace ws(budget);
    return exp_of_ws(f, ws);
}

// ---- substitution machinery -------------------------------------------------

namespace {

// Shared state for one substitution base G: the chain log_i o G, leading
// terms, and memoized rational powers of chain members. Everything is built
// lazily under the observing workspace and shared across summands.
class SubstContext {
public:
    explicit SubstContext(Series g) { iters_.push_back(std::move(g)); }

    const Series& iter(std::size_t i, Workspace& ws) {
        while (iters_.size() <= i) {
            Term lt = leading_or_raise(iters_.back(), ws, ErrorKind::NotInfIncreasing, "log chain");
            require_inf_increasing(lt, "log chain");
            iters_.push_back(log_of_ws(iters_.back(), ws));
        }
        return iters_[i];
    }

    const Term& iter_lead(std::size_t i, Workspace& ws) {
        while (leads_.size() <= i) {
            std::size_t k = leads_.size();
            Term lt = leading_or_raise(iter(k, ws), ws, ErrorKind::NotInfIncreasing, "log chain");
            if (k == 0) require_inf_increasing(lt, "substitution base");
            leads_.push_back(std::move(lt));
        }
        return leads_[i];
    }

    // Cached lead monomial per level, usable without a workspace.
    std::optional<Monomial> cached_lead(std::size_t i) const {
        if (i < leads_.size()) return leads_[i].mono;
        return std::nullopt;
    }

    Series power_of_iter(std::size_t i, const Rational& r, Workspace& ws) {
        auto key = std::make_pair(i, r);
        auto it = powers_.find(key);
        if (it != powers_.end()) return it->second;
        Series p = power_ws(iter(i, ws), r, ws);
        powers_.emplace(key, p);
        return p;
    }

    // Image of a shifted monomial (levels >= 0): level i carries to
    // (log_i o G)^r, level 0 to G^r itself.
    Series image_series(const Term& t, Workspace& ws) {
        Series out = series_const(t.coeff);
        for (const auto& [level, e] : t.mono.exponents()) {
            if (level < 0) raise(ErrorKind::HasExpPart, "substitution argument has an exp component");
            out = mul(out, power_of_iter(static_cast<std::size_t>(level), e, ws));
        }
        return out;
    }

    // Leading monomial of the image, the activation bound for its stream.
    Monomial image_head(const Monomial& m, Workspace& ws) {
        Monomial out;
        for (const auto& [level, e] : m.exponents()) {
            if (level < 0) raise(ErrorKind::HasExpPart, "substitution argument has an exp component");
            out = out.times(iter_lead(static_cast<std::size_t>(level), ws).mono.pow(e));
        }
        return out;
    }

    // image_head from already-built leads only (for workspace-free bounds).
    std::optional<Monomial> image_head_cached(const Monomial& m) const {
        Monomial out;
        for (const auto& [level, e] : m.exponents()) {
            if (level < 0) return std::nullopt;
            auto lead = cached_lead(static_cast<std::size_t>(level));
            if (!lead) return std::nullopt;
            out = out.times(lead->pow(e));
        }
        return out;
    }

private:
    std::vector<Series> iters_;
    std::vector<Term> leads_;
    std::map<std::pair<std::size_t, Rational>, Series> powers_;
};

// Summands are term images of an L'-supported series, in term order; image
// heads decrease strictly because the head map is an order embedding.
class SubstSource : public StreamSource {
public:
    SubstSource(Series f, std::shared_ptr<SubstContext> ctx) : f_(std::move(f)), ctx_(std::move(ctx)) {}

    SrcPull next_stream(Workspace& ws) override {
        Term t;
        switch (f_.try_term(idx_, ws, t)) {
        case Avail::available: {
            ++idx_;
            Monomial bound = ctx_->image_head(t.mono, ws);
            return {SrcStatus::yielded, std::move(bound), ctx_->image_series(t, ws)};
        }
        case Avail::pending:
            return {SrcStatus::progressed, {}, {}};
        case Avail::exhausted:
            return {SrcStatus::exhausted, {}, {}};
        }
        return {SrcStatus::progressed, {}, {}};
    }

    std::optional<Monomial> future_bound() const override {
        TailBound tb = f_.tail_bound(idx_);
        if (!tb.maybe_more || !tb.at_most) return std::nullopt;
        return ctx_->image_head_cached(*tb.at_most);
    }

    const char* label() const override { return "substitution"; }

private:
    Series f_;
    std::shared_ptr<SubstContext> ctx_;
    std::size_t idx_ = 0;
};

// E-grades of F in scan order; the grade-r summand is
// (f_r o log o G) * G^-r per the composition calculus.
class GradeSource : public StreamSource {
public:
    GradeSource(Series f, std::shared_ptr<SubstContext> ctx) : f_(std::move(f)), ctx_(std::move(ctx)) {}

    SrcPull next_stream(Workspace& ws) override {
        Term t;
        switch (f_.try_term(scan_, ws, t)) {
        case Avail::available: {
            ++scan_;
            Rational r = -t.mono.exponent(kLevelExp);
            if (last_grade_ && r == *last_grade_) return {SrcStatus::progressed, {}, {}};
            last_grade_ = r;
            Series fr_sub = staged_sum(std::make_shared<SubstSource>(shift_log(e_coefficient(f_, r)), ctx_));
            Series stream = rat::is_zero(r) ? fr_sub : mul(fr_sub, ctx_->power_of_iter(0, -r, ws));
            Monomial bound = ctx_->image_head(t.mono.shift_levels(1), ws);
            return {SrcStatus::yielded, std::move(bound), std::move(stream)};
        }
        case Avail::pending:
            return {SrcStatus::progressed, {}, {}};
        case Avail::exhausted:
            return {SrcStatus::exhausted, {}, {}};
        }
        return {SrcStatus::progressed, {}, {}};
    }

    std::optional<Monomial> future_bound() const override {
        TailBound tb = f_.tail_bound(scan_);
        if (!tb.maybe_more || !tb.at_most) return std::nullopt;
        return ctx_->image_head_cached(tb.at_most->shift_levels(1));
    }

    const char* label() const override { return "log-composition"; }

private:
    Series f_;
    std::shared_ptr<SubstContext> ctx_;
    std::size_t scan_ = 0;
    std::optional<Rational> last_grade_;
};

std::shared_ptr<SubstContext> make_context(const Series& g, Workspace& ws, const char* who) {
    auto ctx = std::make_shared<SubstContext>(g);
    Term lt = leading_or_raise(g, ws, ErrorKind::NotInfIncreasing, who);
    require_inf_increasing(lt, who);
    ctx->iter_lead(0, ws);
    return ctx;
}

} // namespace

Series substitute_logfree(const Series& f, const Series& g, const Budget& budget) {
    Workspace ws(budget);
    auto ctx = make_context(g, ws, "substitute_logfree");
    return staged_sum(std::make_shared<SubstSource>(f, ctx));
}

Series compose_with_log(const Series& f, const Series& g, const Budget& budget) {
    Workspace ws(budget);
    auto ctx = make_context(g, ws, "compose_with_log");
    return staged_sum(std::make_shared<GradeSource>(f, ctx));
}

namespace {

// Taylor stages (F^(i) o log o g0) H^i / i! with strictly shrinking heads.
class TaylorSource : public StreamSource {
public:
    TaylorSource(Series f, std::shared_ptr<SubstContext> ctx, Series h)
        : ctx_(std::move(ctx)), h_(std::move(h)) {
        derivs_.push_back(std::move(f));
        h_pows_.push_back(series_one());
        inv_fact_.push_back(Rational(1));
    }

    SrcPull next_stream(Workspace& ws) override {
        if (stage_ > 0 && !h_lead_) {
            auto lt = h_.term_at(0, ws);
            if (!lt) return {SrcStatus::exhausted, {}, {}}; // H = 0: single stage
            if (!lt->mono.is_small())
                raise(ErrorKind::NotSmall, "taylor_compose: increment leads with " + lt->mono.to_string());
            h_lead_ = lt->mono;
        }
        while (derivs_.size() <= stage_) derivs_.push_back(derivative(derivs_.back()));
        while (h_pows_.size() <= stage_) h_pows_.push_back(mul(h_pows_.back(), h_));
        while (inv_fact_.size() <= stage_)
            inv_fact_.push_back(inv_fact_.back() / Rational(static_cast<long>(inv_fact_.size())));
        auto lt = derivs_[stage_].term_at(0, ws);
        if (!lt) return {SrcStatus::exhausted, {}, {}}; // all further derivatives vanish
        std::size_t i = stage_++;
        Series composed = staged_sum(std::make_shared<GradeSource>(derivs_[i], ctx_));
        Series stream = mul(scalar_mul(Scalar(inv_fact_[i]), composed), h_pows_[i]);
        Monomial bound = ctx_->image_head(lt->mono.shift_levels(1), ws);
        if (i > 0) bound = bound.times(h_lead_->pow(Rational(static_cast<long>(i))));
        return {SrcStatus::yielded, std::move(bound), std::move(stream)};
    }

    std::optional<Monomial> future_bound() const override { return std::nullopt; }

    const char* label() const override { return "taylor stages"; }

private:
    std::shared_ptr<SubstContext> ctx_;
    Series h_;
    std::vector<Series> derivs_;
    std::vector<Series> h_pows_;
    std::vector<Rational> inv_fact_;
    std::optional<Monomial> h_lead_;
    std::size_t stage_ = 0;
};

} // namespace

Series taylor_compose(const Series& f, const Series& g, const Series& h, const Budget& budget) {
    Workspace ws(budget);
    Series g0;
    try {
        g0 = exp_of_ws(g, ws);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::LargePartNotLogLinear)
            raise(ErrorKind::ShapeNotSupported, "taylor_compose: " + e.detail());
        throw;
    }
    auto ctx = make_context(g0, ws, "taylor_compose");
    return staged_sum(std::make_shared<TaylorSource>(f, ctx, h));
}

} // namespace logfield
