#ifndef LOGFIELD_SERIES_HPP
#define LOGFIELD_SERIES_HPP

#include "logfield/budget.hpp"
#include "logfield/monomial.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace logfield {

// Constructive support bound: the certified support is
// { b * g1^n1 * ... * gp^np : b in bases, n in N^p }, every generator
// strictly small. Soundness contract: a series never emits a monomial
// outside its certificate.
struct GridCertificate {
    std::vector<Monomial> bases;
    std::vector<Monomial> generators;

    static GridCertificate finite(std::vector<Monomial> bs);
    static GridCertificate empty() { return {}; }

    GridCertificate union_with(const GridCertificate& o) const;
    GridCertificate product_with(const GridCertificate& o) const;
    GridCertificate times(const Monomial& m) const;
    GridCertificate map_monomials(const std::function<Monomial(const Monomial&)>& f) const;
    // Certificate for the exp-grade-r slice divided by exp^-r.
    GridCertificate grade_slice(const Rational& r) const;

    // Bounded lattice-membership search (validation aid, not hot path).
    bool contains(const Monomial& m) const;

    void normalize();
};

enum class PullStatus { yielded, progressed, exhausted };

struct Pull {
    PullStatus status;
    Term term{};
    static Pull yielded(Term t) { return {PullStatus::yielded, std::move(t)}; }
    static Pull progressed() { return {PullStatus::progressed, {}}; }
    static Pull exhausted() { return {PullStatus::exhausted, {}}; }
};

// A producer emits the terms of one series in strictly decreasing monomial
// order, a bounded amount of work per call.
class Producer {
public:
    virtual ~Producer() = default;
    virtual Pull next(Workspace& ws) = 0;
    // Inclusive upper bound on every future yield, when one is known.
    virtual std::optional<Monomial> ceiling() const = 0;
    // Support certificate (snapshot; staged sums may widen it as they
    // activate summands).
    virtual GridCertificate certificate() const = 0;
};

// How far a bounded materialization attempt got.
enum class Avail { available, pending, exhausted };

// Bound on the terms of a series from a given index on.
struct TailBound {
    bool maybe_more = true;
    std::optional<Monomial> at_most; // meaningful only if maybe_more
};

// Lazily enumerated generalized series over L with memoized prefix.
// Values are logically immutable and cheap to copy; observations from
// several threads serialize on the producer.
class Series {
public:
    Series(); // the zero series
    explicit Series(std::unique_ptr<Producer> producer);
    static Series finite(std::vector<Term> sorted_terms, GridCertificate cert);

    // Bounded attempt to materialize the i-th term; performs at most a few
    // producer steps. `out` is set when available.
    Avail try_term(std::size_t i, Workspace& ws, Term& out) const;
    // Blocking variant: drives the producer until the term is available or
    // proven absent (or the budget runs out).
    std::optional<Term> term_at(std::size_t i, Workspace& ws) const;

    TailBound tail_bound(std::size_t from_index) const;

    // Terms settled so far (no production).
    std::vector<Term> settled_prefix() const;
    bool known_exhausted() const;

    GridCertificate certificate() const;

    // Identity of the underlying stream (not mathematical equality).
    bool same_stream(const Series& o) const { return state_ == o.state_; }

private:
    struct State;
    std::shared_ptr<State> state_;
};

// ---- staged infinite sums -------------------------------------------------

// Source of summand streams for a staged sum. Streams must arrive with
// strictly decreasing monomial bounds, each bound covering every term of its
// stream; the staged sum raises SummabilityViolation when a later stream
// breaks the contract.
class StreamSource {
public:
    virtual ~StreamSource() = default;

    enum class SrcStatus { yielded, progressed, exhausted };
    struct SrcPull {
        SrcStatus status;
        Monomial bound{};
        Series series{};
    };

    virtual SrcPull next_stream(Workspace& ws) = 0;
    // Bound on every stream not yet returned, when known.
    virtual std::optional<Monomial> future_bound() const = 0;
    virtual GridCertificate base_certificate() const { return GridCertificate::empty(); }
    virtual const char* label() const = 0;
};

Series staged_sum(std::shared_ptr<StreamSource> source);

// ---- constructors and ring operations -------------------------------------

Series from_terms(std::vector<Term> terms);
Series series_const(const Scalar& c);
Series series_one();
Series series_monomial(const Monomial& m, const Scalar& c = Scalar::one());

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& f);
Series scalar_mul(const Scalar& c, const Series& f);
Series mul(const Series& a, const Series& b);
Series mul_monomial(const Series& f, const Monomial& m);
Series truncate_above(const Series& f, const Monomial& n);
Series suffix(const Series& f, std::size_t k);

// Strictly monotone term-wise reindexing (internal building block for level
// shifts and grade slices).
Series map_series(const Series& parent,
                  std::function<Monomial(const Monomial&)> mono_map,
                  std::function<Scalar(const Scalar&)> coeff_map,
                  std::function<GridCertificate(const GridCertificate&)> cert_map);

// ---- observations ----------------------------------------------------------

std::vector<Term> terms_prefix(const Series& f, std::size_t k, const Budget& budget);
std::optional<Term> leading_term(const Series& f, const Budget& budget);
std::optional<Term> leading_term_ws(const Series& f, Workspace& ws);

Rational exp_order(const Series& f, const Budget& budget);
Series e_coefficient(const Series& f, const Rational& r);

bool is_small(const Series& f, const Budget& budget);
bool is_inf_increasing(const Series& f, const Budget& budget);

// Almost-regular construction: rows (nu_i, p_i) assemble sum_i p_i(x) exp^{-nu_i}.
struct AlmostRegularRow {
    Rational nu;
    std::vector<Rational> poly; // coefficient of x^j at index j
};
Series almost_regular(const std::vector<AlmostRegularRow>& rows, bool ilyashenko_class = false);

} // namespace logfield

#endif
