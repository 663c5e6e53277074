#ifndef EVO_POLY_HPP
#define EVO_POLY_HPP

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "evo/ring.hpp"

namespace evo {

/// An exact multivariate polynomial.  Terms are kept strictly descending in
/// the ring's monomial order with no zero coefficients, so equal values have
/// identical representations.  Polynomials are immutable values.
template <class F>
class Poly {
  public:
    using Elem = typename F::Elem;
    struct Term {
        Elem c;
        Monomial m;
    };

    Poly() = default;
    explicit Poly(RingPtr<F> ring) : ring_(std::move(ring)) {}

    /// Builds a polynomial from arbitrary (coefficient, monomial) pairs:
    /// sorts, combines, and drops zeros.
    static Poly make(RingPtr<F> ring, std::vector<Term> terms) {
        Poly p(ring);
        std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
            return ring->order.greater(a.m, b.m);
        });
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().m == t.m) {
                p.terms_.back().c = p.terms_.back().c + t.c;
                if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
            } else if (!t.c.is_zero()) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    static Poly zero(RingPtr<F> ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr<F> ring, Elem c) {
        Poly p(ring);
        if (!c.is_zero()) p.terms_.push_back(Term{std::move(c), Monomial(p.ring_->arity())});
        return p;
    }
    static Poly variable(RingPtr<F> ring, size_t i, int32_t exp = 1) {
        Monomial m(ring->arity());
        m.set(i, exp);
        return monomial(std::move(ring), std::move(m));
    }
    static Poly monomial(RingPtr<F> ring, Monomial m) {
        Poly p(ring);
        p.terms_.push_back(Term{p.ring_->field.one(), std::move(m)});
        return p;
    }

    const RingPtr<F>& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c.is_one();
    }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

    const Term& leading_term() const {
        if (terms_.empty()) throw Error("leading term of zero polynomial");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().m; }
    const Elem& leading_coefficient() const { return leading_term().c; }

    int64_t degree() const {  // total degree; -1 for 0
        int64_t d = -1;
        for (auto& t : terms_) d = std::max(d, t.m.degree());
        return d;
    }

    Poly operator+(const Poly& o) const { return merge(o, false); }
    Poly operator-(const Poly& o) const { return merge(o, true); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    Poly operator*(const Poly& o) const {
        check_ring(o);
        std::vector<Term> acc;
        acc.reserve(terms_.size() * o.terms_.size());
        for (const Term& a : terms_)
            for (const Term& b : o.terms_) acc.push_back(Term{a.c * b.c, a.m * b.m});
        return make(ring_, std::move(acc));
    }

    Poly scaled(const Elem& c) const {
        if (c.is_zero()) return zero(ring_);
        Poly r(*this);
        for (auto& t : r.terms_) t.c = t.c * c;
        return r;
    }

    /// c * x^m * this
    Poly times_term(const Elem& c, const Monomial& m) const {
        if (c.is_zero()) return zero(ring_);
        Poly r(*this);
        for (auto& t : r.terms_) {
            t.c = t.c * c;
            t.m = t.m * m;
        }
        return r;
    }

    Poly pow(uint32_t n) const {
        Poly r = constant(ring_, ring_->field.one());
        Poly b = *this;
        while (n) {
            if (n & 1) r = r * b;
            b = n > 1 ? b * b : b;
            n >>= 1;
        }
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(leading_coefficient().inv());
    }

    bool operator==(const Poly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c)
                return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Deterministic total compare (by term sequence under the ring order);
    /// used for canonical sorting of generator lists and reports.
    int compare(const Poly& o) const {
        size_t n = std::min(terms_.size(), o.terms_.size());
        for (size_t i = 0; i < n; ++i) {
            int c = ring_->order.compare(terms_[i].m, o.terms_[i].m);
            if (c != 0) return c;
        }
        if (terms_.size() != o.terms_.size())
            return terms_.size() > o.terms_.size() ? 1 : -1;
        return 0;
    }

    void check_ring(const Poly& o) const {
        if (ring_ == o.ring_) return;
        if (!ring_ || !o.ring_ || !(*ring_ == *o.ring_))
            throw RingMismatchError("polynomials from different ring contexts");
    }

    /// Re-sorts this polynomial's terms into a compatible sibling ring
    /// (same variables/field/weights, possibly different order).
    Poly in_ring(const RingPtr<F>& target) const {
        if (ring_ == target || (ring_ && *ring_ == *target)) {
            Poly r = *this;
            r.ring_ = target;
            return r;
        }
        if (!ring_->compatible(*target))
            throw RingMismatchError("incompatible ring contexts");
        return make(target, terms_);
    }

  private:
    Poly merge(const Poly& o, bool subtract) const {
        check_ring(o);
        Poly r(ring_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        size_t i = 0, j = 0;
        const auto& ord = ring_->order;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = ord.compare(terms_[i].m, o.terms_[j].m);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                Term t = o.terms_[j++];
                if (subtract) t.c = -t.c;
                r.terms_.push_back(std::move(t));
            } else {
                Elem c2 = subtract ? terms_[i].c - o.terms_[j].c : terms_[i].c + o.terms_[j].c;
                if (!c2.is_zero()) r.terms_.push_back(Term{std::move(c2), terms_[i].m});
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) {
            Term t = o.terms_[j];
            if (subtract) t.c = -t.c;
            r.terms_.push_back(std::move(t));
        }
        return r;
    }

    RingPtr<F> ring_;
    std::vector<Term> terms_;
};

/// Formal partial derivative with respect to variable i.  In characteristic
/// p, terms whose i-exponent is divisible by p vanish.
template <class F>
Poly<F> partial_derivative(const Poly<F>& f, size_t i) {
    if (f.is_zero()) return f;
    const auto& ring = f.ring();
    if (i >= ring->arity()) throw Error("variable index out of range");
    std::vector<typename Poly<F>::Term> acc;
    for (const auto& t : f.terms()) {
        int32_t e = t.m[i];
        if (e == 0) continue;
        auto c = t.c * ring->field.from_int(e);
        if (c.is_zero()) continue;
        Monomial m = t.m;
        m.set(i, e - 1);
        acc.push_back({std::move(c), std::move(m)});
    }
    return Poly<F>::make(ring, std::move(acc));
}

/// The common weighted degree of all terms, or nullopt if the terms disagree
/// (not quasihomogeneous).  The zero polynomial reports degree 0.
template <class F>
std::optional<int64_t> weighted_degree(const Poly<F>& f) {
    const auto& ring = f.ring();
    if (!ring->has_weights()) throw PreconditionError("ring has no weights configured");
    if (f.is_zero()) return 0;
    int64_t d = f.terms()[0].m.weighted_degree(ring->weights);
    for (const auto& t : f.terms())
        if (t.m.weighted_degree(ring->weights) != d) return std::nullopt;
    return d;
}

/// For quasihomogeneous f with invertible weighted degree, returns the list
/// (w_j/deg(f)) * df/dx_j, so that f = sum_j x_j * result_j.  This certifies
/// f in M * (df/dx_1, ..., df/dx_n).
template <class F>
std::vector<Poly<F>> euler_combination(const Poly<F>& f) {
    const auto& ring = f.ring();
    auto deg = weighted_degree(f);
    if (!deg) throw PreconditionError("polynomial is not quasihomogeneous");
    auto deg_elem = ring->field.from_int(*deg);
    if (deg_elem.is_zero())
        throw PreconditionError("weighted degree " + std::to_string(*deg) +
                                " is not invertible in " + ring->field.name());
    auto inv = deg_elem.inv();
    std::vector<Poly<F>> out;
    out.reserve(ring->arity());
    for (size_t j = 0; j < ring->arity(); ++j) {
        auto cj = ring->field.from_int(ring->weights[j]) * inv;
        out.push_back(partial_derivative(f, j).scaled(cj));
    }
    return out;
}

}  // namespace evo

#endif
