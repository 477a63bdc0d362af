#include "logfield/series.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace logfield {

// ---- GridCertificate -------------------------------------------------------

GridCertificate GridCertificate::finite(std::vector<Monomial> bs) {
    GridCertificate c;
    c.bases = std::move(bs);
    c.normalize();
    return c;
}

void GridCertificate::normalize() {
    auto dedupe = [](std::vector<Monomial>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedupe(bases);
    dedupe(generators);
    for (const auto& g : generators)
        if (!g.is_small()) raise(ErrorKind::InternalInvariant, "certificate generator not small: " + g.to_string());
}

GridCertificate GridCertificate::union_with(const GridCertificate& o) const {
    GridCertificate c = *this;
    c.bases.insert(c.bases.end(), o.bases.begin(), o.bases.end());
    c.generators.insert(c.generators.end(), o.generators.begin(), o.generators.end());
    c.normalize();
    return c;
}

GridCertificate GridCertificate::product_with(const GridCertificate& o) const {
    GridCertificate c;
    for (const auto& a : bases)
        for (const auto& b : o.bases) c.bases.push_back(a.times(b));
    c.generators = generators;
    c.generators.insert(c.generators.end(), o.generators.begin(), o.generators.end());
    c.normalize();
    return c;
}

GridCertificate GridCertificate::times(const Monomial& m) const {
    GridCertificate c = *this;
    for (auto& b : c.bases) b = b.times(m);
    c.normalize();
    return c;
}

GridCertificate GridCertificate::map_monomials(const std::function<Monomial(const Monomial&)>& f) const {
    GridCertificate c;
    for (const auto& b : bases) c.bases.push_back(f(b));
    for (const auto& g : generators) c.generators.push_back(f(g));
    c.normalize();
    return c;
}

namespace {

Rational exp_grade(const Monomial& m) { return -m.exponent(kLevelExp); }

void slice_solutions(const std::vector<std::pair<Monomial, Rational>>& graded_gens, std::size_t idx,
                     const Rational& remaining, const Monomial& acc, std::vector<Monomial>& out) {
    if (idx == graded_gens.size()) {
        if (rat::is_zero(remaining)) out.push_back(acc.drop_exp());
        return;
    }
    const auto& [g, d] = graded_gens[idx];
    Monomial cur = acc;
    Rational left = remaining;
    while (sgn(left) >= 0) {
        slice_solutions(graded_gens, idx + 1, left, cur, out);
        left -= d;
        cur = cur.times(g);
    }
}

} // namespace

GridCertificate GridCertificate::grade_slice(const Rational& r) const {
    GridCertificate c;
    std::vector<std::pair<Monomial, Rational>> graded;
    for (const auto& g : generators) {
        Rational d = exp_grade(g);
        if (rat::is_zero(d))
            c.generators.push_back(g);
        else
            graded.emplace_back(g, d);
    }
    for (const auto& b : bases) {
        Rational s = r - exp_grade(b);
        if (sgn(s) < 0) continue;
        slice_solutions(graded, 0, s, b, c.bases);
    }
    c.normalize();
    return c;
}

namespace {

bool gens_reach(const std::vector<Monomial>& gens, std::size_t idx, const Monomial& target, int depth) {
    if (target.is_one()) return true;
    if (idx == gens.size() || depth <= 0) return false;
    Monomial t = target;
    for (int k = 0; k <= depth; ++k) {
        if (gens_reach(gens, idx + 1, t, depth - k)) return true;
        t = t.times(gens[idx].inverse());
    }
    return false;
}

} // namespace

bool GridCertificate::contains(const Monomial& m) const {
    for (const auto& b : bases) {
        if (gens_reach(generators, 0, m.times(b.inverse()), 64)) return true;
    }
    return false;
}

// ---- Series state ----------------------------------------------------------

struct Series::State {
    mutable std::mutex mu;
    std::vector<Term> memo;
    bool exhausted = false;
    std::unique_ptr<Producer> producer;
    std::optional<GridCertificate> static_cert;
};

Series::Series() : state_(std::make_shared<State>()) {
    state_->exhausted = true;
    state_->static_cert = GridCertificate::empty();
}

Series::Series(std::unique_ptr<Producer> producer) : state_(std::make_shared<State>()) {
    state_->producer = std::move(producer);
}

Series Series::finite(std::vector<Term> sorted_terms, GridCertificate cert) {
    Series s;
    s.state_->memo = std::move(sorted_terms);
    s.state_->exhausted = true;
    s.state_->static_cert = std::move(cert);
    return s;
}

Avail Series::try_term(std::size_t i, Workspace& ws, Term& out) const {
    std::lock_guard lk(state_->mu);
    if (state_->memo.size() > i) {
        out = state_->memo[i];
        return Avail::available;
    }
    if (state_->exhausted) return Avail::exhausted;
    ws.count_step("series production");
    Pull p = state_->producer->next(ws);
    switch (p.status) {
    case PullStatus::yielded: {
        if (p.term.coeff.is_zero())
            raise(ErrorKind::InternalInvariant, "producer yielded a zero coefficient");
        if (!state_->memo.empty() && !(p.term.mono < state_->memo.back().mono))
            raise(ErrorKind::InternalInvariant, "producer yielded out of order at " + p.term.mono.to_string());
        ws.count_term();
        state_->memo.push_back(std::move(p.term));
        if (state_->memo.size() > i) {
            out = state_->memo[i];
            return Avail::available;
        }
        return Avail::pending;
    }
    case PullStatus::progressed:
        return Avail::pending;
    case PullStatus::exhausted:
        state_->exhausted = true;
        return Avail::exhausted;
    }
    return Avail::pending;
}

std::optional<Term> Series::term_at(std::size_t i, Workspace& ws) const {
    Term t;
    while (true) {
        switch (try_term(i, ws, t)) {
        case Avail::available: return t;
        case Avail::exhausted: return std::nullopt;
        case Avail::pending: break;
        }
    }
}

TailBound Series::tail_bound(std::size_t from_index) const {
    std::lock_guard lk(state_->mu);
    if (state_->memo.size() > from_index) return {true, state_->memo[from_index].mono};
    if (state_->exhausted) return {false, {}};
    return {true, state_->producer->ceiling()};
}

std::vector<Term> Series::settled_prefix() const {
    std::lock_guard lk(state_->mu);
    return state_->memo;
}

bool Series::known_exhausted() const {
    std::lock_guard lk(state_->mu);
    return state_->exhausted;
}

GridCertificate Series::certificate() const {
    std::unique_lock lk(state_->mu);
    if (state_->static_cert) return *state_->static_cert;
    auto* p = state_->producer.get();
    lk.unlock(); // certificate computation may walk children
    return p->certificate();
}

// ---- simple producers -------------------------------------------------------

namespace {

class MapProducer : public Producer {
public:
    MapProducer(Series parent, std::function<Monomial(const Monomial&)> mono_map,
                std::function<Scalar(const Scalar&)> coeff_map,
                std::function<GridCertificate(const GridCertificate&)> cert_map)
        : parent_(std::move(parent)), mono_map_(std::move(mono_map)), coeff_map_(std::move(coeff_map)),
          cert_map_(std::move(cert_map)) {}

    Pull next(Workspace& ws) override {
        Term t;
        switch (parent_.try_term(idx_, ws, t)) {
        case Avail::available: {
            ++idx_;
            Scalar c = coeff_map_(t.coeff);
            if (c.is_zero()) raise(ErrorKind::InternalInvariant, "term map produced a zero coefficient");
            return Pull::yielded({std::move(c), mono_map_(t.mono)});
        }
        case Avail::pending: return Pull::progressed();
        case Avail::exhausted: return Pull::exhausted();
        }
        return Pull::progressed();
    }

    std::optional<Monomial> ceiling() const override {
        TailBound tb = parent_.tail_bound(idx_);
        if (!tb.maybe_more || !tb.at_most) return std::nullopt;
        return mono_map_(*tb.at_most);
    }

    GridCertificate certificate() const override { return cert_map_(parent_.certificate()); }

private:
    Series parent_;
    std::size_t idx_ = 0;
    std::function<Monomial(const Monomial&)> mono_map_;
    std::function<Scalar(const Scalar&)> coeff_map_;
    std::function<GridCertificate(const GridCertificate&)> cert_map_;
};

class MergeProducer : public Producer {
public:
    MergeProducer(Series a, Series b) : a_(std::move(a)), b_(std::move(b)) {}

    Pull next(Workspace& ws) override {
        Term ta, tb;
        Avail aa = a_.try_term(ia_, ws, ta);
        Avail ab = b_.try_term(ib_, ws, tb);
        if (aa == Avail::pending || ab == Avail::pending) return Pull::progressed();
        if (aa == Avail::exhausted && ab == Avail::exhausted) return Pull::exhausted();
        if (aa == Avail::exhausted) {
            ++ib_;
            return Pull::yielded(std::move(tb));
        }
        if (ab == Avail::exhausted) {
            ++ia_;
            return Pull::yielded(std::move(ta));
        }
        if (ta.mono > tb.mono) {
            ++ia_;
            return Pull::yielded(std::move(ta));
        }
        if (tb.mono > ta.mono) {
            ++ib_;
            return Pull::yielded(std::move(tb));
        }
        ++ia_;
        ++ib_;
        Scalar c = ta.coeff + tb.coeff;
        if (c.is_zero()) return Pull::progressed();
        return Pull::yielded({std::move(c), ta.mono});
    }

    std::optional<Monomial> ceiling() const override {
        std::optional<Monomial> out;
        for (const auto* s : {&a_, &b_}) {
            TailBound tb = s->tail_bound(s == &a_ ? ia_ : ib_);
            if (!tb.maybe_more) continue;
            if (!tb.at_most) return std::nullopt;
            if (!out || *tb.at_most > *out) out = tb.at_most;
        }
        return out;
    }

    GridCertificate certificate() const override { return a_.certificate().union_with(b_.certificate()); }

private:
    Series a_, b_;
    std::size_t ia_ = 0, ib_ = 0;
};

class MulProducer : public Producer {
public:
    MulProducer(Series f, Series g) : f_(std::move(f)), g_(std::move(g)) { enqueue(0, 0); }

    Pull next(Workspace& ws) override {
        if (done_) return Pull::exhausted();
        bool any_pending = false;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> still;
        for (auto [i, j] : waiting_) {
            Term ft, gt;
            Avail af = f_.try_term(i, ws, ft);
            if (af == Avail::exhausted) continue;
            Avail ag = g_.try_term(j, ws, gt);
            if (ag == Avail::exhausted) continue;
            if (af == Avail::available && ag == Avail::available) {
                frontier_[ft.mono.times(gt.mono)].push_back({i, j});
            } else {
                still.push_back({i, j});
                any_pending = true;
            }
        }
        waiting_ = std::move(still);
        if (frontier_.empty()) {
            if (waiting_.empty()) {
                done_ = true;
                return Pull::exhausted();
            }
            return Pull::progressed();
        }
        if (any_pending) {
            const Monomial& top = frontier_.begin()->first;
            for (auto [i, j] : waiting_) {
                auto b = pair_bound(i, j);
                if (!b || !(*b < top)) return Pull::progressed();
            }
        }
        auto node = frontier_.extract(frontier_.begin());
        const Monomial mono = node.key();
        Scalar coeff;
        for (auto [i, j] : node.mapped()) {
            Term ft, gt;
            f_.try_term(i, ws, ft);
            g_.try_term(j, ws, gt);
            coeff += ft.coeff * gt.coeff;
            popped_.insert(pack(i, j));
        }
        for (auto [i, j] : node.mapped()) {
            if (j == 0 || popped_.count(pack(i + 1, j - 1))) enqueue(i + 1, j);
            if (i == 0 || popped_.count(pack(i - 1, j + 1))) enqueue(i, j + 1);
        }
        if (coeff.is_zero()) return Pull::progressed();
        return Pull::yielded({std::move(coeff), mono});
    }

    std::optional<Monomial> ceiling() const override {
        std::optional<Monomial> out;
        if (!frontier_.empty()) out = frontier_.begin()->first;
        for (auto [i, j] : waiting_) {
            auto b = pair_bound(i, j);
            if (!b) return std::nullopt;
            if (!out || *b > *out) out = *b;
        }
        return out;
    }

    GridCertificate certificate() const override { return f_.certificate().product_with(g_.certificate()); }

private:
    static std::uint64_t pack(std::uint32_t i, std::uint32_t j) { return (std::uint64_t(i) << 32) | j; }

    void enqueue(std::uint32_t i, std::uint32_t j) {
        if (seen_.insert(pack(i, j)).second) waiting_.push_back({i, j});
    }

    std::optional<Monomial> pair_bound(std::uint32_t i, std::uint32_t j) const {
        TailBound bf = f_.tail_bound(i), bg = g_.tail_bound(j);
        if (!bf.maybe_more || !bg.maybe_more) return std::nullopt; // resolves away next call
        if (!bf.at_most || !bg.at_most) return std::nullopt;
        return bf.at_most->times(*bg.at_most);
    }

    Series f_, g_;
    std::map<Monomial, std::vector<std::pair<std::uint32_t, std::uint32_t>>, std::greater<Monomial>> frontier_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> waiting_;
    std::set<std::uint64_t> popped_, seen_;
    bool done_ = false;
};

class TruncateProducer : public Producer {
public:
    TruncateProducer(Series parent, Monomial floor) : parent_(std::move(parent)), floor_(std::move(floor)) {}

    Pull next(Workspace& ws) override {
        Term t;
        switch (parent_.try_term(idx_, ws, t)) {
        case Avail::available:
            if (t.mono < floor_) return Pull::exhausted();
            ++idx_;
            return Pull::yielded(std::move(t));
        case Avail::exhausted:
            return Pull::exhausted();
        case Avail::pending: {
            TailBound tb = parent_.tail_bound(idx_);
            if (!tb.maybe_more || (tb.at_most && *tb.at_most < floor_)) return Pull::exhausted();
            return Pull::progressed();
        }
        }
        return Pull::progressed();
    }

    std::optional<Monomial> ceiling() const override {
        TailBound tb = parent_.tail_bound(idx_);
        if (!tb.maybe_more) return std::nullopt;
        return tb.at_most;
    }

    GridCertificate certificate() const override { return parent_.certificate(); }

private:
    Series parent_;
    Monomial floor_;
    std::size_t idx_ = 0;
};

class SuffixProducer : public Producer {
public:
    SuffixProducer(Series parent, std::size_t skip) : parent_(std::move(parent)), idx_(skip) {}

    Pull next(Workspace& ws) override {
        Term t;
        switch (parent_.try_term(idx_, ws, t)) {
        case Avail::available: ++idx_; return Pull::yielded(std::move(t));
        case Avail::exhausted: return Pull::exhausted();
        case Avail::pending: return Pull::progressed();
        }
        return Pull::progressed();
    }

    std::optional<Monomial> ceiling() const override {
        TailBound tb = parent_.tail_bound(idx_);
        if (!tb.maybe_more) return std::nullopt;
        return tb.at_most;
    }

    GridCertificate certificate() const override { return parent_.certificate(); }

private:
    Series parent_;
    std::size_t idx_;
};

// Grade slice for e_coefficient: keeps terms with exp-grade exactly r,
// divided by exp^-r. Grades are nondecreasing along the enumeration, so the
// slice is exhausted as soon as a deeper grade (or bound) shows up.
class FilterGradeProducer : public Producer {
public:
    FilterGradeProducer(Series parent, Rational r) : parent_(std::move(parent)), r_(std::move(r)) {}

    Pull next(Workspace& ws) override {
        Term t;
        switch (parent_.try_term(idx_, ws, t)) {
        case Avail::available: {
            Rational grade = exp_grade(t.mono);
            if (grade > r_) return Pull::exhausted();
            ++idx_;
            if (grade == r_) return Pull::yielded({t.coeff, t.mono.drop_exp()});
            return Pull::progressed();
        }
        case Avail::exhausted:
            return Pull::exhausted();
        case Avail::pending: {
            TailBound tb = parent_.tail_bound(idx_);
            if (!tb.maybe_more || (tb.at_most && exp_grade(*tb.at_most) > r_)) return Pull::exhausted();
            return Pull::progressed();
        }
        }
        return Pull::progressed();
    }

    std::optional<Monomial> ceiling() const override {
        TailBound tb = parent_.tail_bound(idx_);
        if (!tb.maybe_more) return std::nullopt;
        if (!tb.at_most) return std::nullopt;
        return tb.at_most->times(Monomial::factor(kLevelExp, r_));
    }

    GridCertificate certificate() const override { return parent_.certificate().grade_slice(r_); }

private:
    Series parent_;
    Rational r_;
    std::size_t idx_ = 0;
};

// Staged sum with monotone activation: summands arrive from the source with
// strictly decreasing bounds; a term is emitted only once every stream that
// could still reach it is active.
class StreamSumProducer : public Producer {
public:
    explicit StreamSumProducer(std::shared_ptr<StreamSource> src) : src_(std::move(src)) {}

    Pull next(Workspace& ws) override {
        // materialize the cursor term of every active summand
        bool pending = false;
        std::optional<Monomial> cand;
        {
            Term t;
            for (auto it = active_.begin(); it != active_.end();) {
                switch (it->series.try_term(it->cursor, ws, t)) {
                case Avail::exhausted:
                    it = active_.erase(it);
                    continue;
                case Avail::pending:
                    pending = true;
                    break;
                case Avail::available:
                    if (!cand || t.mono > *cand) cand = t.mono;
                    break;
                }
                ++it;
            }
        }
        if (pending) return Pull::progressed();

        if (!cand) {
            if (staged_) return activate();
            if (src_done_) return Pull::exhausted();
            return pull_source(ws);
        }
        if (staged_) {
            if (!(staged_->bound < *cand)) return activate();
        } else if (!src_done_) {
            auto fb = src_->future_bound();
            if (!fb || !(*fb < *cand)) return pull_source(ws);
        }

        // emit: merge every active cursor term sitting at the candidate
        Scalar coeff;
        Term t;
        for (auto& a : active_) {
            a.series.try_term(a.cursor, ws, t);
            if (t.mono == *cand) {
                coeff += t.coeff;
                ++a.cursor;
            }
        }
        last_emitted_ = cand;
        if (coeff.is_zero()) return Pull::progressed();
        return Pull::yielded({std::move(coeff), *cand});
    }

    std::optional<Monomial> ceiling() const override {
        std::optional<Monomial> out;
        bool all_known = true;
        auto acc = [&](const std::optional<Monomial>& m) {
            if (!m) {
                all_known = false;
                return;
            }
            if (!out || *m > *out) out = m;
        };
        for (const auto& a : active_) {
            TailBound tb = a.series.tail_bound(a.cursor);
            if (tb.maybe_more) acc(tb.at_most);
        }
        if (staged_) acc(staged_->bound);
        if (!src_done_) acc(src_->future_bound());
        if (all_known) return out;
        return last_emitted_; // emissions are strictly decreasing
    }

    GridCertificate certificate() const override {
        GridCertificate c = src_->base_certificate();
        for (const auto& s : all_streams_) c = c.union_with(s.certificate());
        return c;
    }

private:
    struct Active {
        Series series;
        std::size_t cursor = 0;
    };
    struct Staged {
        Monomial bound;
        Series series;
    };

    Pull activate() {
        all_streams_.push_back(staged_->series);
        active_.push_back({std::move(staged_->series), 0});
        staged_.reset();
        return Pull::progressed();
    }

    Pull pull_source(Workspace& ws) {
        ws.count_step(src_->label());
        auto sp = src_->next_stream(ws);
        switch (sp.status) {
        case StreamSource::SrcStatus::exhausted:
            src_done_ = true;
            break;
        case StreamSource::SrcStatus::progressed:
            break;
        case StreamSource::SrcStatus::yielded:
            if (last_bound_ && !(sp.bound < *last_bound_))
                raise(ErrorKind::SummabilityViolation,
                      std::string(src_->label()) + ": summand bound " + sp.bound.to_string() +
                          " does not fall below the previous bound " + last_bound_->to_string());
            last_bound_ = sp.bound;
            staged_ = Staged{std::move(sp.bound), std::move(sp.series)};
            break;
        }
        return Pull::progressed();
    }

    std::shared_ptr<StreamSource> src_;
    std::vector<Active> active_;
    std::vector<Series> all_streams_;
    std::optional<Staged> staged_;
    std::optional<Monomial> last_bound_, last_emitted_;
    bool src_done_ = false;
};

bool is_known_zero(const Series& s) { return s.known_exhausted() && s.settled_prefix().empty(); }

} // namespace

Series staged_sum(std::shared_ptr<StreamSource> source) {
    return Series(std::make_unique<StreamSumProducer>(std::move(source)));
}

// ---- constructors -----------------------------------------------------------

Series from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
    std::vector<Term> canon;
    for (auto& t : terms) {
        if (!canon.empty() && canon.back().mono == t.mono) {
            canon.back().coeff += t.coeff;
            if (canon.back().coeff.is_zero()) canon.pop_back();
        } else if (!t.coeff.is_zero()) {
            canon.push_back(std::move(t));
        }
    }
    std::vector<Monomial> bases;
    for (const auto& t : canon) bases.push_back(t.mono);
    return Series::finite(std::move(canon), GridCertificate::finite(std::move(bases)));
}

Series series_const(const Scalar& c) {
    if (c.is_zero()) return Series();
    return from_terms({{c, Monomial::one()}});
}

Series series_one() { return series_const(Scalar::one()); }

Series series_monomial(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return Series();
    return from_terms({{c, m}});
}

Series add(const Series& a, const Series& b) {
    if (is_known_zero(a)) return b;
    if (is_known_zero(b)) return a;
    return Series(std::make_unique<MergeProducer>(a, b));
}

Series negate(const Series& f) { return scalar_mul(Scalar(Rational(-1)), f); }

Series sub(const Series& a, const Series& b) { return add(a, negate(b)); }

Series scalar_mul(const Scalar& c, const Series& f) {
    if (c.is_zero()) return Series();
    if (c == Scalar::one()) return f;
    return map_series(
        f, [](const Monomial& m) { return m; }, [c](const Scalar& s) { return c * s; },
        [](const GridCertificate& cert) { return cert; });
}

Series mul(const Series& a, const Series& b) {
    if (is_known_zero(a) || is_known_zero(b)) return Series();
    return Series(std::make_unique<MulProducer>(a, b));
}

Series mul_monomial(const Series& f, const Monomial& m) {
    if (m.is_one()) return f;
    return map_series(
        f, [m](const Monomial& x) { return x.times(m); }, [](const Scalar& s) { return s; },
        [m](const GridCertificate& cert) { return cert.times(m); });
}

Series truncate_above(const Series& f, const Monomial& n) {
    return Series(std::make_unique<TruncateProducer>(f, n));
}

Series suffix(const Series& f, std::size_t k) { return Series(std::make_unique<SuffixProducer>(f, k)); }

Series map_series(const Series& parent, std::function<Monomial(const Monomial&)> mono_map,
                  std::function<Scalar(const Scalar&)> coeff_map,
                  std::function<GridCertificate(const GridCertificate&)> cert_map) {
    return Series(std::make_unique<MapProducer>(parent, std::move(mono_map), std::move(coeff_map), std::move(cert_map)));
}

// ---- observations -----------------------------------------------------------

std::vector<Term> terms_prefix(const Series& f, std::size_t k, const Budget& budget) {
    Workspace ws(budget);
    std::vector<Term> out;
    for (std::size_t i = 0; i < k; ++i) {
        auto t = f.term_at(i, ws);
        if (!t) break;
        out.push_back(std::move(*t));
    }
    return out;
}

std::optional<Term> leading_term(const Series& f, const Budget& budget) {
    Workspace ws(budget);
    return f.term_at(0, ws);
}

std::optional<Term> leading_term_ws(const Series& f, Workspace& ws) { return f.term_at(0, ws); }

Rational exp_order(const Series& f, const Budget& budget) {
    auto lead = leading_term(f, budget);
    if (!lead) raise(ErrorKind::ZeroSeries, "exp_order of the zero series");
    return -lead->mono.exponent(kLevelExp);
}

Series e_coefficient(const Series& f, const Rational& r) {
    return Series(std::make_unique<FilterGradeProducer>(f, r));
}

bool is_small(const Series& f, const Budget& budget) {
    auto lead = leading_term(f, budget);
    if (!lead) return true; // empty support tends to 0
    return lead->mono.is_small();
}

bool is_inf_increasing(const Series& f, const Budget& budget) {
    auto lead = leading_term(f, budget);
    if (!lead) return false;
    return lead->mono.is_large() && lead->coeff.sign() > 0;
}

Series almost_regular(const std::vector<AlmostRegularRow>& rows, bool ilyashenko_class) {
    std::vector<Term> terms;
    std::optional<Rational> prev;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (sgn(row.nu) < 0) raise(ErrorKind::MalformedInput, "almost_regular: nu must be >= 0");
        if (prev && !(*prev < row.nu)) raise(ErrorKind::MalformedInput, "almost_regular: nu must be strictly increasing");
        prev = row.nu;
        if (ilyashenko_class && i == 0) {
            bool const_nonzero = !row.poly.empty() && !rat::is_zero(row.poly[0]);
            for (std::size_t j = 1; j < row.poly.size(); ++j)
                if (!rat::is_zero(row.poly[j])) const_nonzero = false;
            if (!const_nonzero)
                raise(ErrorKind::MalformedInput, "almost_regular: p0 must be a nonzero constant");
        }
        for (std::size_t j = 0; j < row.poly.size(); ++j) {
            if (rat::is_zero(row.poly[j])) continue;
            Monomial m = Monomial::make({{0, Rational(static_cast<long>(j))}, {kLevelExp, -row.nu}});
            terms.push_back({Scalar(row.poly[j]), m});
        }
    }
    return from_terms(std::move(terms));
}

} // namespace logfield
