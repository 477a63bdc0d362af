#include "logfield/field.hpp"

namespace logfield {

namespace {

// Stages c_n * eps^n with bounds lead(eps)^n; the n-th stage cannot reach
// above lead(eps)^n, which makes the staged sum sound.
class PowerStagesSource : public StreamSource {
public:
    PowerStagesSource(PowerSeries1 p, Series eps) : p_(std::move(p)), eps_(std::move(eps)) {
        pows_.push_back(series_one());
    }

    SrcPull next_stream(Workspace& ws) override {
        if (stage_ == 0) {
            ++stage_;
            Rational c0 = p_.coeff(0);
            if (!rat::is_zero(c0)) return {SrcStatus::yielded, Monomial::one(), series_const(Scalar(c0))};
            return {SrcStatus::progressed, {}, {}};
        }
        if (!lead_ && !eps_zero_) {
            Term t;
            switch (eps_.try_term(0, ws, t)) {
            case Avail::available:
                if (!t.mono.is_small())
                    raise(ErrorKind::NotSmall,
                          "compose_ps1(" + p_.label() + "): argument leads with " + t.mono.to_string());
                lead_ = t.mono;
                break;
            case Avail::pending:
                return {SrcStatus::progressed, {}, {}};
            case Avail::exhausted:
                eps_zero_ = true;
                break;
            }
        }
        if (eps_zero_) return {SrcStatus::exhausted, {}, {}};
        if (p_.degree() && stage_ > *p_.degree()) return {SrcStatus::exhausted, {}, {}};
        std::size_t n = stage_++;
        Rational c = p_.coeff(n);
        if (rat::is_zero(c)) return {SrcStatus::progressed, {}, {}};
        while (pows_.size() <= n) pows_.push_back(mul(pows_.back(), eps_));
        return {SrcStatus::yielded, lead_->pow(Rational(static_cast<long>(n))), scalar_mul(Scalar(c), pows_[n])};
    }

    std::optional<Monomial> future_bound() const override {
        if (stage_ == 0) return Monomial::one();
        if (!lead_) return std::nullopt;
        return lead_->pow(Rational(static_cast<long>(stage_)));
    }

    GridCertificate base_certificate() const override {
        return GridCertificate::finite({Monomial::one()});
    }

    const char* label() const override { return "compose_ps1"; }

private:
    PowerSeries1 p_;
    Series eps_;
    std::optional<Monomial> lead_;
    bool eps_zero_ = false;
    std::vector<Series> pows_;
    std::size_t stage_ = 0;
};

// G = a g (1 + eps) split at the full leading term; eps = G/(a g) - 1.
struct LeadingSplit {
    Scalar a;
    Monomial g;
    Series eps;
};

LeadingSplit split_leading(const Series& g, Workspace& ws, ErrorKind on_zero, const char* who) {
    auto lt = g.term_at(0, ws);
    if (!lt) raise(on_zero, std::string(who) + " of a series proven zero");
    Series eps = mul_monomial(scalar_mul(lt->coeff.inverse(), suffix(g, 1)), lt->mono.inverse());
    return {lt->coeff, lt->mono, std::move(eps)};
}

} // namespace

Series compose_ps1(const PowerSeries1& p, const Series& eps) {
    return staged_sum(std::make_shared<PowerStagesSource>(p, eps));
}

Series divide_ws(const Series& f, const Series& g, Workspace& ws) {
    LeadingSplit s = split_leading(g, ws, ErrorKind::DivisionByZero, "division");
    Series recip = mul_monomial(scalar_mul(s.a.inverse(), compose_ps1(ps1_geom(), negate(s.eps))), s.g.inverse());
    return mul(f, recip);
}

Series divide(const Series& f, const Series& g, const Budget& budget) {
    Workspace ws(budget);
    return divide_ws(f, g, ws);
}

Series power_ws(const Series& g, const Rational& r, Workspace& ws) {
    if (rat::is_zero(r)) return series_one();
    LeadingSplit s = split_leading(g, ws, ErrorKind::DivisionByZero, "power");
    return mul_monomial(scalar_mul(s.a.pow(r), compose_ps1(ps1_binomial(r), s.eps)), s.g.pow(r));
}

Series power(const Series& g, const Rational& r, const Budget& budget) {
    Workspace ws(budget);
    return power_ws(g, r, ws);
}

LeadingDecomposition decompose_leading(const Series& f, const Budget& budget) {
    Workspace ws(budget);
    auto lt = f.term_at(0, ws);
    if (!lt) raise(ErrorKind::ZeroSeries, "decompose_leading of a series proven zero");
    Rational d = -lt->mono.exponent(kLevelExp);
    Series head = e_coefficient(f, d);
    Series denom = mul_monomial(head, Monomial::factor(kLevelExp, -d));
    // (f - denom)/denom rather than f/denom - 1: subtracting the grade-d
    // block first keeps the quotient's enumeration off the infinite
    // cancellation at grade d.
    Series eps = divide_ws(sub(f, denom), denom, ws);
    return {std::move(d), std::move(head), std::move(eps)};
}

} // namespace logfield
