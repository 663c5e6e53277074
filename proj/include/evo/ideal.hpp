#ifndef EVO_IDEAL_HPP
#define EVO_IDEAL_HPP

#include <map>
#include <mutex>

#include "evo/groebner.hpp"

namespace evo {

/// An ideal of a polynomial ring: a generator list plus lazily computed,
/// cached reduced Groebner bases (one per monomial order).  Immutable after
/// construction except for the cache, which is memoized under a lock.
template <class F>
class Ideal {
  public:
    Ideal() = default;
    Ideal(RingPtr<F> ring, std::vector<Poly<F>> gens) {
        impl_ = std::make_shared<Impl>();
        impl_->ring = std::move(ring);
        for (auto& g : gens) {
            Poly<F> h = g.in_ring(impl_->ring);
            if (!h.is_zero()) impl_->gens.push_back(std::move(h));
        }
    }

    const RingPtr<F>& ring() const { return impl_->ring; }
    const std::vector<Poly<F>>& gens() const { return impl_->gens; }

    const GroebnerBasis<F>& groebner() const { return groebner(impl_->ring->order); }

    const GroebnerBasis<F>& groebner(const MonomialOrder& order) const {
        std::lock_guard<std::mutex> lock(impl_->mu);
        auto key = order.key();
        auto it = impl_->cache.find(key);
        if (it == impl_->cache.end()) {
            auto gb = std::make_shared<GroebnerBasis<F>>(
                buchberger(with_order(impl_->ring, order), impl_->gens));
            it = impl_->cache.emplace(key, std::move(gb)).first;
        }
        return *it->second;
    }

    /// Installs a basis known to be a reduced Groebner basis of this ideal
    /// (e.g. produced by an elimination run).
    void seed_basis(GroebnerBasis<F> gb) const {
        std::lock_guard<std::mutex> lock(impl_->mu);
        auto key = gb.ring->order.key();
        impl_->cache.emplace(key, std::make_shared<GroebnerBasis<F>>(std::move(gb)));
    }

    /// Any cached basis if one exists (memberships can use any order).
    const GroebnerBasis<F>* any_cached_basis() const {
        std::lock_guard<std::mutex> lock(impl_->mu);
        if (impl_->cache.empty()) return nullptr;
        return impl_->cache.begin()->second.get();
    }

    bool contains(const Poly<F>& f) const { return normal_form_of(f).is_zero(); }

    /// Membership certificate: the normal form (zero iff f lies in the ideal).
    Poly<F> normal_form_of(const Poly<F>& f) const {
        const GroebnerBasis<F>* gb = any_cached_basis();
        if (!gb) gb = &groebner();
        return normal_form(f, *gb);
    }

    bool contains_ideal(const Ideal& J) const {
        for (const auto& g : J.gens())
            if (!contains(g)) return false;
        return true;
    }

    bool equals(const Ideal& J) const { return contains_ideal(J) && J.contains_ideal(*this); }

    bool is_zero() const { return impl_->gens.empty(); }
    bool is_unit() const { return groebner().is_unit(); }

  private:
    struct Impl {
        RingPtr<F> ring;
        std::vector<Poly<F>> gens;
        mutable std::mutex mu;
        std::map<std::string, std::shared_ptr<const GroebnerBasis<F>>> cache;
    };
    std::shared_ptr<Impl> impl_;
};

/// Deterministic generator ordering: ascending total degree, then term order.
template <class F>
void sort_polys(std::vector<Poly<F>>& v) {
    std::sort(v.begin(), v.end(), [](const Poly<F>& a, const Poly<F>& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.compare(b) < 0;
    });
}

template <class F>
Ideal<F> unit_ideal(const RingPtr<F>& ring) {
    return Ideal<F>(ring, {Poly<F>::constant(ring, ring->field.one())});
}

/// The maximal ideal (x_1, ..., x_n) of the ring context.
template <class F>
Ideal<F> maximal_ideal(const RingPtr<F>& ring) {
    std::vector<Poly<F>> gens;
    for (size_t i = 0; i < ring->arity(); ++i) gens.push_back(Poly<F>::variable(ring, i));
    return Ideal<F>(ring, std::move(gens));
}

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& I, const Ideal<F>& J) {
    std::vector<Poly<F>> gens = I.gens();
    for (const auto& g : J.gens()) gens.push_back(g.in_ring(I.ring()));
    return Ideal<F>(I.ring(), std::move(gens));
}

template <class F>
Ideal<F> ideal_product(const Ideal<F>& I, const Ideal<F>& J) {
    std::vector<Poly<F>> gens;
    for (const auto& a : I.gens())
        for (const auto& b : J.gens()) gens.push_back(a * b.in_ring(I.ring()));
    return Ideal<F>(I.ring(), std::move(gens));
}

/// I^n; n = 0 gives the unit ideal.
template <class F>
Ideal<F> ideal_power(const Ideal<F>& I, uint32_t n) {
    if (n == 0) return unit_ideal(I.ring());
    Ideal<F> r = I;
    for (uint32_t k = 1; k < n; ++k) r = ideal_product(r, I);
    return r;
}

// ---------------------------------------------------------------------------
// Ring extension with one auxiliary variable
// ---------------------------------------------------------------------------

namespace detail {

/// Pads weight layers to a larger arity (new variables weigh 1); sequence
/// layers are left alone (an empty seq keeps meaning "all variables").
inline MonomialOrder pad_order_weights(const MonomialOrder& o, size_t arity) {
    bool todo = false;
    for (const auto& l : o.layers())
        if (l.kind == MonomialOrder::LayerKind::Weight && l.weights.size() < arity) todo = true;
    if (!todo) return o;
    std::vector<MonomialOrder::Layer> ls = o.layers();
    for (auto& l : ls)
        if (l.kind == MonomialOrder::LayerKind::Weight)
            while (l.weights.size() < arity) l.weights.push_back(1);
    return MonomialOrder::from_layers(std::move(ls));
}

template <class F>
struct ExtendedRing {
    RingPtr<F> ext;   // original variables plus one auxiliary, elimination order
    size_t aux_pos;   // index of the auxiliary variable
};

template <class F>
ExtendedRing<F> extend_with_aux(const RingPtr<F>& ring) {
    std::vector<std::string> vars = ring->vars;
    vars.push_back("@t");  // not expressible in the input grammar, so no clash
    std::vector<int64_t> weights = ring->weights;
    if (!weights.empty()) weights.push_back(1);
    size_t n1 = vars.size();
    MonomialOrder back = pad_order_weights(ring->order, n1);
    MonomialOrder order = MonomialOrder::elimination({int(n1) - 1}, n1, back);
    return {make_ring(ring->field, std::move(vars), std::move(order), std::move(weights)),
            n1 - 1};
}

template <class F>
Poly<F> poly_extend(const RingPtr<F>& ext, const Poly<F>& f) {
    std::vector<typename Poly<F>::Term> acc;
    for (const auto& t : f.terms()) {
        std::vector<int32_t> e = t.m.exponents();
        e.resize(ext->arity(), 0);
        acc.push_back({t.c, Monomial(std::move(e))});
    }
    return Poly<F>::make(ext, std::move(acc));
}

template <class F>
Poly<F> poly_restrict(const RingPtr<F>& base, const Poly<F>& f) {
    std::vector<typename Poly<F>::Term> acc;
    for (const auto& t : f.terms()) {
        std::vector<int32_t> e = t.m.exponents();
        for (size_t i = base->arity(); i < e.size(); ++i)
            if (e[i] != 0) throw Error("cannot restrict: term involves auxiliary variable");
        e.resize(base->arity());
        acc.push_back({t.c, Monomial(std::move(e))});
    }
    return Poly<F>::make(base, std::move(acc));
}

}  // namespace detail

/// I ∩ k[vars outside `drop`], computed with a block order placing `drop`
/// in the leading block.  The result is returned as an ideal of the same
/// ring whose generators do not involve the dropped variables.
template <class F>
Ideal<F> eliminate(const Ideal<F>& I, const std::vector<int>& drop) {
    if (drop.empty()) return I;
    const RingPtr<F>& ring = I.ring();
    MonomialOrder back = detail::pad_order_weights(ring->order, ring->arity());
    MonomialOrder elim = MonomialOrder::elimination(drop, ring->arity(), back);
    const GroebnerBasis<F>& gb = I.groebner(elim);
    std::vector<bool> dropped(ring->arity(), false);
    for (int v : drop) dropped[size_t(v)] = true;
    std::vector<Poly<F>> kept;
    for (const auto& g : gb.elems) {
        bool free_of = true;
        for (const auto& t : g.terms())
            for (size_t v = 0; v < ring->arity() && free_of; ++v)
                if (dropped[v] && t.m[v] != 0) free_of = false;
        if (free_of) kept.push_back(g.in_ring(ring));
    }
    return Ideal<F>(ring, std::move(kept));
}

/// I ∩ J via the auxiliary-variable trick: eliminate t from t*I + (1-t)*J.
template <class F>
Ideal<F> intersect(const Ideal<F>& I, const Ideal<F>& J) {
    const RingPtr<F>& ring = I.ring();
    auto ext = detail::extend_with_aux(ring);
    Poly<F> t = Poly<F>::variable(ext.ext, ext.aux_pos);
    Poly<F> one_minus_t = Poly<F>::constant(ext.ext, ext.ext->field.one()) - t;
    std::vector<Poly<F>> gens;
    for (const auto& g : I.gens()) gens.push_back(t * detail::poly_extend(ext.ext, g));
    for (const auto& g : J.gens())
        gens.push_back(one_minus_t * detail::poly_extend(ext.ext, g.in_ring(ring)));
    const GroebnerBasis<F> gb = buchberger(ext.ext, gens);
    std::vector<Poly<F>> kept;
    for (const auto& g : gb.elems) {
        bool tfree = true;
        for (const auto& term : g.terms())
            if (term.m[ext.aux_pos] != 0) tfree = false;
        if (tfree) kept.push_back(detail::poly_restrict(ring, g));
    }
    return Ideal<F>(ring, std::move(kept));
}

/// Exact division by a single polynomial; every reduction step must cancel.
template <class F>
Poly<F> divide_exact(const Poly<F>& f, const Poly<F>& g) {
    if (g.is_zero()) throw DivisionByZeroError("exact division by zero polynomial");
    Poly<F> h = f;
    std::vector<typename Poly<F>::Term> q;
    while (!h.is_zero()) {
        const auto& lt = h.leading_term();
        if (!g.leading_monomial().divides(lt.m))
            throw Error("division is not exact");
        typename Poly<F>::Term step{lt.c / g.leading_coefficient(),
                                    lt.m / g.leading_monomial()};
        h = h - g.times_term(step.c, step.m);
        q.push_back(std::move(step));
    }
    return Poly<F>::make(f.ring(), std::move(q));
}

/// (I : f) for a single nonzero f, via (I ∩ (f)) / f.
template <class F>
Ideal<F> quotient_by_element(const Ideal<F>& I, const Poly<F>& f) {
    Ideal<F> Jf(I.ring(), {f});
    Ideal<F> meet = intersect(I, Jf);
    std::vector<Poly<F>> gens;
    for (const auto& g : meet.gens()) gens.push_back(divide_exact(g, f.in_ring(I.ring())));
    return Ideal<F>(I.ring(), std::move(gens));
}

/// (I : J) = {f : f*J ⊆ I}, intersected over the generators of J.
/// J = 0 gives the unit ideal.
template <class F>
Ideal<F> quotient(const Ideal<F>& I, const Ideal<F>& J) {
    bool any = false;
    Ideal<F> acc;
    for (const auto& g : J.gens()) {
        if (g.is_zero()) continue;
        Ideal<F> q = quotient_by_element(I, g.in_ring(I.ring()));
        acc = any ? intersect(acc, q) : q;
        any = true;
    }
    if (!any) return unit_ideal(I.ring());
    return acc;
}

/// (I : f^∞) via elimination of t from I + (t*f - 1).
template <class F>
Ideal<F> saturate(const Ideal<F>& I, const Poly<F>& f) {
    if (f.is_zero()) throw PreconditionError("saturation by zero");
    const RingPtr<F>& ring = I.ring();
    auto ext = detail::extend_with_aux(ring);
    Poly<F> t = Poly<F>::variable(ext.ext, ext.aux_pos);
    std::vector<Poly<F>> gens;
    for (const auto& g : I.gens()) gens.push_back(detail::poly_extend(ext.ext, g));
    gens.push_back(t * detail::poly_extend(ext.ext, f.in_ring(ring)) -
                   Poly<F>::constant(ext.ext, ext.ext->field.one()));
    const GroebnerBasis<F> gb = buchberger(ext.ext, gens);
    std::vector<Poly<F>> kept;
    for (const auto& g : gb.elems) {
        bool tfree = true;
        for (const auto& term : g.terms())
            if (term.m[ext.aux_pos] != 0) tfree = false;
        if (tfree) kept.push_back(detail::poly_restrict(ring, g));
    }
    return Ideal<F>(ring, std::move(kept));
}

/// f ∈ √I, via 1 ∈ I + (t*f - 1).
template <class F>
bool radical_membership(const Ideal<F>& I, const Poly<F>& f) {
    if (f.is_zero()) return true;
    const RingPtr<F>& ring = I.ring();
    auto ext = detail::extend_with_aux(ring);
    Poly<F> t = Poly<F>::variable(ext.ext, ext.aux_pos);
    std::vector<Poly<F>> gens;
    for (const auto& g : I.gens()) gens.push_back(detail::poly_extend(ext.ext, g));
    gens.push_back(t * detail::poly_extend(ext.ext, f.in_ring(ring)) -
                   Poly<F>::constant(ext.ext, ext.ext->field.one()));
    return buchberger(ext.ext, gens).is_unit();
}

/// Krull dimension of P/I, computed combinatorially from the leading-term
/// ideal: the largest set S of variables such that no leading monomial is
/// supported inside S.
template <class F>
int64_t dimension(const Ideal<F>& I) {
    const GroebnerBasis<F>& gb = I.groebner();
    if (gb.is_unit()) throw PreconditionError("dimension of the unit ideal");
    size_t n = I.ring()->arity();
    if (n > 24) throw Error("dimension: too many variables for subset enumeration");
    std::vector<uint32_t> supports;
    for (const auto& g : gb.elems) {
        uint32_t s = 0;
        for (size_t v = 0; v < n; ++v)
            if (g.leading_monomial()[v] != 0) s |= (1u << v);
        supports.push_back(s);
    }
    int64_t best = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (uint32_t s : supports)
            if ((s & ~mask) == 0) {
                independent = false;
                break;
            }
        if (independent) best = std::max<int64_t>(best, __builtin_popcount(mask));
    }
    return best;
}

/// codim(I) = n - dim(P/I); rejects the zero and unit ideals.
template <class F>
int64_t codimension(const Ideal<F>& I) {
    if (I.is_zero()) throw PreconditionError("codimension of the zero ideal");
    return int64_t(I.ring()->arity()) - dimension(I);
}

/// Graded Nakayama test: f ∈ I is a minimal generator iff f ∉ M*I.
template <class F>
bool is_minimal_generator(const Ideal<F>& I, const Poly<F>& f) {
    if (!I.contains(f))
        throw PreconditionError("minimal-generator test: element does not lie in the ideal");
    return !ideal_product(maximal_ideal(I.ring()), I).contains(f);
}

/// A minimal generating set (graded Nakayama): process generators by
/// ascending degree, keeping g only if it is not already generated modulo
/// M*I by the kept ones.
template <class F>
std::vector<Poly<F>> min_generators(const Ideal<F>& I) {
    std::vector<Poly<F>> gens = I.gens();
    sort_polys(gens);
    Ideal<F> mI = ideal_product(maximal_ideal(I.ring()), I);
    std::vector<Poly<F>> kept;
    for (const auto& g : gens) {
        std::vector<Poly<F>> test = kept;
        for (const auto& m : mI.gens()) test.push_back(m);
        if (!Ideal<F>(I.ring(), std::move(test)).contains(g)) kept.push_back(g);
    }
    return kept;
}

}  // namespace evo

#endif
