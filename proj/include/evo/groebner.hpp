#ifndef EVO_GROEBNER_HPP
#define EVO_GROEBNER_HPP

#include <atomic>
#include <cstdint>
#include <set>
#include <span>

#include "evo/poly.hpp"

namespace evo {

// ---------------------------------------------------------------------------
// Reduction-step budget
// ---------------------------------------------------------------------------

namespace config {
/// Per-computation cap on reduction steps; a single Groebner run that
/// exceeds it aborts with BudgetExceededError instead of hanging.
inline std::atomic<uint64_t> reduction_budget{1'000'000};
/// When set, every reduced basis is re-checked against the Buchberger
/// criterion (all S-polynomials reduce to zero) before being returned.
inline std::atomic<bool> verify_bases{false};
/// Total reduction steps across the process, for resource reporting.
inline std::atomic<uint64_t> steps_total{0};
/// Count of reduced bases that passed the self-check since last reset.
inline std::atomic<uint64_t> bases_verified{0};

inline void reset_counters() {
    steps_total = 0;
    bases_verified = 0;
}
}  // namespace config

class ReductionCounter {
  public:
    explicit ReductionCounter(uint64_t limit)
        : limit_(limit ? limit : config::reduction_budget.load()) {}
    ReductionCounter(const ReductionCounter&) = delete;
    ~ReductionCounter() { config::steps_total += used_; }

    void tick() {
        if (++used_ > limit_)
            throw BudgetExceededError(
                "reduction budget of " + std::to_string(limit_) + " steps exceeded", used_);
    }
    uint64_t used() const { return used_; }

  private:
    uint64_t limit_;
    uint64_t used_ = 0;
};

// ---------------------------------------------------------------------------
// Normalization helpers
// ---------------------------------------------------------------------------

template <class F>
Poly<F> normalized_for_basis(const Poly<F>& f);

/// GF(p): make monic.
template <>
inline Poly<GfField> normalized_for_basis(const Poly<GfField>& f) {
    return f.monic();
}

/// QQ: clear denominators and content, positive leading coefficient.  Keeps
/// coefficient growth in check during basis construction.
template <>
inline Poly<RatField> normalized_for_basis(const Poly<RatField>& f) {
    if (f.is_zero()) return f;
    BigInt den_lcm = 1, num_gcd = 0;
    for (const auto& t : f.terms()) {
        den_lcm = boost::multiprecision::lcm(den_lcm, t.c.denominator());
        num_gcd = boost::multiprecision::gcd(num_gcd, t.c.numerator());
    }
    RatElem scale(den_lcm, num_gcd);
    if ((f.leading_coefficient() * scale).is_negative()) scale = -scale;
    return f.scaled(scale);
}

// ---------------------------------------------------------------------------
// Division
// ---------------------------------------------------------------------------

/// Remainder of multivariate division of f by the (ordered) list `basis`.
/// Deterministic: always reduces the leading term by the first divisor in
/// list order.  When basis is a Groebner basis, the result is the normal
/// form: zero iff f lies in the generated ideal.
template <class F>
Poly<F> poly_normal_form(Poly<F> f, std::span<const Poly<F>> basis, ReductionCounter& ctr) {
    using Term = typename Poly<F>::Term;
    if (f.is_zero()) return f;
    RingPtr<F> ring = f.ring();  // by value: f is reassigned below
    std::vector<Term> remainder;
    while (!f.is_zero()) {
        const auto& lt = f.leading_term();
        bool reduced = false;
        for (const Poly<F>& g : basis) {
            if (g.is_zero()) continue;
            if (!g.leading_monomial().divides(lt.m)) continue;
            ctr.tick();
            auto q = lt.c / g.leading_coefficient();
            f = f - g.times_term(q, lt.m / g.leading_monomial());
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.push_back(lt);
            f = f - Poly<F>::make(ring, {lt});
        }
    }
    // terms were peeled in strictly descending order
    return Poly<F>::make(ring, std::move(remainder));
}

template <class F>
Poly<F> spoly(const Poly<F>& f, const Poly<F>& g) {
    Monomial m = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Poly<F> a = f.times_term(f.leading_coefficient().inv(), m / f.leading_monomial());
    Poly<F> b = g.times_term(g.leading_coefficient().inv(), m / g.leading_monomial());
    return a - b;
}

// ---------------------------------------------------------------------------
// Buchberger
// ---------------------------------------------------------------------------

template <class F>
struct GroebnerBasis {
    RingPtr<F> ring;               // carries the order the basis is reduced under
    std::vector<Poly<F>> elems;    // monic, autoreduced, ascending leading monomials
    bool reduced = true;

    bool is_unit() const { return elems.size() == 1 && elems[0].is_one(); }
    bool is_zero_ideal() const { return elems.empty(); }
};

/// Membership: normal form of f against gb (converted into gb's ring).
template <class F>
Poly<F> normal_form(const Poly<F>& f, const GroebnerBasis<F>& gb, uint64_t budget = 0) {
    ReductionCounter ctr(budget);
    return poly_normal_form(f.in_ring(gb.ring), std::span<const Poly<F>>(gb.elems), ctr);
}

namespace detail {

/// Minimalize + tail-reduce + make monic an existing Groebner set.
template <class F>
std::vector<Poly<F>> reduce_groebner_set(const RingPtr<F>& ring, std::vector<Poly<F>> g,
                                         ReductionCounter& ctr) {
    std::erase_if(g, [](const Poly<F>& p) { return p.is_zero(); });
    // minimal set: drop any element whose leading monomial is divisible by
    // another element's leading monomial (ties resolved by keeping the first
    // in ascending order)
    std::sort(g.begin(), g.end(), [&](const Poly<F>& a, const Poly<F>& b) {
        int c = ring->order.compare(a.leading_monomial(), b.leading_monomial());
        if (c != 0) return c < 0;
        return a.compare(b) < 0;
    });
    std::vector<Poly<F>> minimal;
    for (const auto& p : g) {
        bool redundant = false;
        for (const auto& q : minimal)
            if (q.leading_monomial().divides(p.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(p);
    }
    // tail-reduce each element against the others
    std::vector<Poly<F>> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly<F>> others;
        others.reserve(minimal.size() - 1);
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly<F> r = poly_normal_form(minimal[i], std::span<const Poly<F>>(others), ctr);
        out.push_back(r.monic());
    }
    std::sort(out.begin(), out.end(), [&](const Poly<F>& a, const Poly<F>& b) {
        return ring->order.less(a.leading_monomial(), b.leading_monomial());
    });
    return out;
}

}  // namespace detail

/// Buchberger's algorithm with the product and chain criteria and normal
/// (smallest-lcm) pair selection; ties broken by generator indices, so the
/// run is deterministic.  Returns the reduced Groebner basis.
template <class F>
GroebnerBasis<F> buchberger(const RingPtr<F>& ring, const std::vector<Poly<F>>& gens,
                            uint64_t budget = 0) {
    ReductionCounter ctr(budget);
    std::vector<Poly<F>> g;
    for (const auto& f : gens) {
        Poly<F> h = f.in_ring(ring);
        if (!h.is_zero()) g.push_back(normalized_for_basis(h));
    }
    GroebnerBasis<F> out;
    out.ring = ring;
    if (g.empty()) return out;

    struct PairKey {
        Monomial lcm;
        int i, j;
    };
    auto pair_less = [&](const PairKey& a, const PairKey& b) {
        int c = ring->order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<PairKey, decltype(pair_less)> queue(pair_less);
    std::set<std::pair<int, int>> pending;

    auto push_pair = [&](int i, int j) {
        queue.insert(PairKey{Monomial::lcm(g[size_t(i)].leading_monomial(),
                                           g[size_t(j)].leading_monomial()),
                             i, j});
        pending.insert({i, j});
    };
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j) push_pair(int(i), int(j));

    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({pk.i, pk.j});
        const Poly<F>& fi = g[size_t(pk.i)];
        const Poly<F>& fj = g[size_t(pk.j)];
        // product criterion
        if (fi.leading_monomial().coprime_with(fj.leading_monomial())) continue;
        // chain criterion
        bool skip = false;
        for (size_t k = 0; k < g.size() && !skip; ++k) {
            if (int(k) == pk.i || int(k) == pk.j) continue;
            if (!g[k].leading_monomial().divides(pk.lcm)) continue;
            std::pair<int, int> a{std::min(pk.i, int(k)), std::max(pk.i, int(k))};
            std::pair<int, int> b{std::min(pk.j, int(k)), std::max(pk.j, int(k))};
            if (!pending.count(a) && !pending.count(b)) skip = true;
        }
        if (skip) continue;

        Poly<F> r = poly_normal_form(spoly(fi, fj), std::span<const Poly<F>>(g), ctr);
        if (r.is_zero()) continue;
        g.push_back(normalized_for_basis(r));
        int t = int(g.size()) - 1;
        if (g.back().is_constant()) {  // unit ideal: stop early
            out.elems = {Poly<F>::constant(ring, ring->field.one())};
            return out;
        }
        for (int k = 0; k < t; ++k) push_pair(k, t);
    }

    out.elems = detail::reduce_groebner_set(ring, std::move(g), ctr);

    if (config::verify_bases.load()) {
        for (size_t i = 0; i < out.elems.size(); ++i)
            for (size_t j = i + 1; j < out.elems.size(); ++j) {
                Poly<F> s = poly_normal_form(spoly(out.elems[i], out.elems[j]),
                                             std::span<const Poly<F>>(out.elems), ctr);
                if (!s.is_zero())
                    throw Error("Groebner self-check failed: S-polynomial does not reduce to 0");
            }
        ++config::bases_verified;
    }
    return out;
}

/// Re-reduces a set already known to be a Groebner basis (no new S-pairs).
template <class F>
GroebnerBasis<F> reduce_known_basis(const RingPtr<F>& ring, std::vector<Poly<F>> gens,
                                    uint64_t budget = 0) {
    ReductionCounter ctr(budget);
    GroebnerBasis<F> out;
    out.ring = ring;
    out.elems = detail::reduce_groebner_set(ring, std::move(gens), ctr);
    if (config::verify_bases.load()) {
        for (size_t i = 0; i < out.elems.size(); ++i)
            for (size_t j = i + 1; j < out.elems.size(); ++j) {
                Poly<F> s = poly_normal_form(spoly(out.elems[i], out.elems[j]),
                                             std::span<const Poly<F>>(out.elems), ctr);
                if (!s.is_zero())
                    throw Error("reduce_known_basis: input set is not a Groebner basis");
            }
        ++config::bases_verified;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Free-module elements and module Groebner bases (position over term)
// ---------------------------------------------------------------------------

/// An element of the free module R^r: a fixed-length vector of polynomials.
template <class F>
struct Vec {
    std::vector<Poly<F>> c;

    static Vec zero(const RingPtr<F>& ring, size_t rank) {
        Vec v;
        v.c.assign(rank, Poly<F>::zero(ring));
        return v;
    }
    static Vec unit(const RingPtr<F>& ring, size_t rank, size_t pos) {
        Vec v = zero(ring, rank);
        v.c[pos] = Poly<F>::constant(ring, ring->field.one());
        return v;
    }

    size_t rank() const { return c.size(); }
    bool is_zero() const {
        for (const auto& p : c)
            if (!p.is_zero()) return false;
        return true;
    }
    /// Index of the leading (position-over-term) component: the first
    /// nonzero slot.  Precondition: not zero.
    size_t lead_pos() const {
        for (size_t i = 0; i < c.size(); ++i)
            if (!c[i].is_zero()) return i;
        throw Error("lead of zero module element");
    }

    Vec operator+(const Vec& o) const {
        Vec r = *this;
        for (size_t i = 0; i < c.size(); ++i) r.c[i] = r.c[i] + o.c[i];
        return r;
    }
    Vec operator-(const Vec& o) const {
        Vec r = *this;
        for (size_t i = 0; i < c.size(); ++i) r.c[i] = r.c[i] - o.c[i];
        return r;
    }
    Vec times_term(const typename F::Elem& coef, const Monomial& m) const {
        Vec r = *this;
        for (auto& p : r.c) p = p.times_term(coef, m);
        return r;
    }
    Vec scaled(const typename F::Elem& coef) const {
        Vec r = *this;
        for (auto& p : r.c) p = p.scaled(coef);
        return r;
    }
    bool operator==(const Vec& o) const { return c == o.c; }
};

/// Full division of v by basis under position-over-term order; deterministic.
template <class F>
Vec<F> module_normal_form(Vec<F> v, std::span<const Vec<F>> basis, ReductionCounter& ctr) {
    if (v.is_zero()) return v;
    RingPtr<F> ring = v.c[v.lead_pos()].ring();  // by value: v is reassigned below
    Vec<F> remainder = Vec<F>::zero(ring, v.rank());
    while (!v.is_zero()) {
        size_t pos = v.lead_pos();
        const auto& lt = v.c[pos].leading_term();
        bool reduced = false;
        for (const Vec<F>& g : basis) {
            if (g.is_zero()) continue;
            size_t gpos = g.lead_pos();
            if (gpos != pos) continue;
            const auto& glt = g.c[gpos].leading_term();
            if (!glt.m.divides(lt.m)) continue;
            ctr.tick();
            v = v - g.times_term(lt.c / glt.c, lt.m / glt.m);
            reduced = true;
            break;
        }
        if (!reduced) {
            Poly<F> t = Poly<F>::make(ring, {lt});
            remainder.c[pos] = remainder.c[pos] + t;
            v.c[pos] = v.c[pos] - t;
        }
    }
    return remainder;
}

template <class F>
struct ModuleBasis {
    RingPtr<F> ring;
    size_t rank = 0;
    std::vector<Vec<F>> elems;
};

namespace detail {

template <class F>
Vec<F> vec_monic(const Vec<F>& v) {
    return v.scaled(v.c[v.lead_pos()].leading_coefficient().inv());
}

template <class F>
int vec_compare(const RingPtr<F>& ring, const Vec<F>& a, const Vec<F>& b) {
    size_t pa = a.lead_pos(), pb = b.lead_pos();
    if (pa != pb) return pa < pb ? 1 : -1;  // earlier position = greater (POT)
    return ring->order.compare(a.c[pa].leading_monomial(), b.c[pb].leading_monomial());
}

}  // namespace detail

/// Buchberger for submodules of R^rank under the position-over-term
/// extension of the ring order.  Returns a reduced module basis.
template <class F>
ModuleBasis<F> module_buchberger(const RingPtr<F>& ring, const std::vector<Vec<F>>& gens,
                                 size_t rank, uint64_t budget = 0) {
    ReductionCounter ctr(budget);
    std::vector<Vec<F>> g;
    for (const auto& v : gens)
        if (!v.is_zero()) g.push_back(detail::vec_monic(v));

    ModuleBasis<F> out;
    out.ring = ring;
    out.rank = rank;
    if (g.empty()) return out;

    struct PairKey {
        Monomial lcm;
        size_t pos;
        int i, j;
    };
    auto pair_less = [&](const PairKey& a, const PairKey& b) {
        if (a.pos != b.pos) return a.pos < b.pos;
        int c = ring->order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<PairKey, decltype(pair_less)> queue(pair_less);
    auto push_pair = [&](int i, int j) {
        const Vec<F>& a = g[size_t(i)];
        const Vec<F>& b = g[size_t(j)];
        size_t pa = a.lead_pos();
        if (pa != b.lead_pos()) return;  // no S-vector across components
        queue.insert(PairKey{Monomial::lcm(a.c[pa].leading_monomial(),
                                           b.c[pa].leading_monomial()),
                             pa, i, j});
    };
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j) push_pair(int(i), int(j));

    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        const Vec<F>& a = g[size_t(pk.i)];
        const Vec<F>& b = g[size_t(pk.j)];
        size_t pos = pk.pos;
        Monomial m = Monomial::lcm(a.c[pos].leading_monomial(), b.c[pos].leading_monomial());
        Vec<F> s = a.times_term(ring->field.one(), m / a.c[pos].leading_monomial()) -
                   b.times_term(ring->field.one(), m / b.c[pos].leading_monomial());
        Vec<F> r = module_normal_form(std::move(s), std::span<const Vec<F>>(g), ctr);
        if (r.is_zero()) continue;
        g.push_back(detail::vec_monic(r));
        int t = int(g.size()) - 1;
        for (int k = 0; k < t; ++k) push_pair(k, t);
    }

    // reduce: minimal leads, tail-reduced, deterministic order
    std::sort(g.begin(), g.end(), [&](const Vec<F>& x, const Vec<F>& y) {
        return detail::vec_compare(ring, x, y) < 0;
    });
    std::vector<Vec<F>> minimal;
    for (const auto& v : g) {
        size_t pos = v.lead_pos();
        bool redundant = false;
        for (const auto& w : minimal) {
            if (w.lead_pos() != pos) continue;
            if (w.c[pos].leading_monomial().divides(v.c[pos].leading_monomial())) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(v);
    }
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Vec<F>> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Vec<F> r = module_normal_form(minimal[i], std::span<const Vec<F>>(others), ctr);
        out.elems.push_back(detail::vec_monic(r));
    }
    std::sort(out.elems.begin(), out.elems.end(), [&](const Vec<F>& x, const Vec<F>& y) {
        return detail::vec_compare(ring, x, y) < 0;
    });
    return out;
}

template <class F>
Vec<F> module_normal_form(const Vec<F>& v, const ModuleBasis<F>& mb, uint64_t budget = 0) {
    ReductionCounter ctr(budget);
    return module_normal_form(v, std::span<const Vec<F>>(mb.elems), ctr);
}

// ---------------------------------------------------------------------------
// Syzygies (Schreyer / cofactor tracking)
// ---------------------------------------------------------------------------

/// Generating set of the syzygy module {(a_1..a_n) : sum a_i gens_i = 0}.
/// Runs Buchberger on the generators while tracking, for every basis
/// element, a cofactor vector expressing it over the input; every
/// S-vector that reduces to zero deposits its cofactor as a syzygy.  No
/// pair-discarding criteria are used in this mode, so by Schreyer's theorem
/// the collected vectors generate the full syzygy module.
template <class F>
std::vector<Vec<F>> module_syzygies(const RingPtr<F>& ring, const std::vector<Vec<F>>& gens,
                                    size_t rank, uint64_t budget = 0) {
    ReductionCounter ctr(budget);
    const size_t n = gens.size();
    struct Tracked {
        Vec<F> v;
        Vec<F> cof;
    };
    std::vector<Tracked> g;
    std::vector<Vec<F>> syz;
    for (size_t i = 0; i < n; ++i) {
        Vec<F> v = gens[i];
        Vec<F> cof = Vec<F>::unit(ring, n, i);
        if (v.is_zero()) {
            syz.push_back(cof);  // a zero generator contributes e_i
            continue;
        }
        auto lc = v.c[v.lead_pos()].leading_coefficient().inv();
        g.push_back(Tracked{v.scaled(lc), cof.scaled(lc)});
    }
    if (g.empty()) return syz;

    struct PairKey {
        Monomial lcm;
        size_t pos;
        int i, j;
    };
    auto pair_less = [&](const PairKey& a, const PairKey& b) {
        if (a.pos != b.pos) return a.pos < b.pos;
        int c = ring->order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<PairKey, decltype(pair_less)> queue(pair_less);
    auto push_pair = [&](int i, int j) {
        const Vec<F>& a = g[size_t(i)].v;
        const Vec<F>& b = g[size_t(j)].v;
        size_t pa = a.lead_pos();
        if (pa != b.lead_pos()) return;
        queue.insert(PairKey{Monomial::lcm(a.c[pa].leading_monomial(),
                                           b.c[pa].leading_monomial()),
                             pa, i, j});
    };
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j) push_pair(int(i), int(j));

    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        const Tracked& A = g[size_t(pk.i)];
        const Tracked& B = g[size_t(pk.j)];
        size_t pos = pk.pos;
        Monomial m = Monomial::lcm(A.v.c[pos].leading_monomial(),
                                   B.v.c[pos].leading_monomial());
        Monomial ua = m / A.v.c[pos].leading_monomial();
        Monomial ub = m / B.v.c[pos].leading_monomial();
        auto one = ring->field.one();
        Vec<F> h = A.v.times_term(one, ua) - B.v.times_term(one, ub);
        Vec<F> cof = A.cof.times_term(one, ua) - B.cof.times_term(one, ub);

        // full division with cofactor tracking
        Vec<F> remainder = Vec<F>::zero(ring, h.rank());
        while (!h.is_zero()) {
            size_t hp = h.lead_pos();
            const auto& lt = h.c[hp].leading_term();
            bool reduced = false;
            for (const Tracked& t : g) {
                size_t tp = t.v.lead_pos();
                if (tp != hp) continue;
                const auto& glt = t.v.c[tp].leading_term();
                if (!glt.m.divides(lt.m)) continue;
                ctr.tick();
                auto q = lt.c / glt.c;
                Monomial qm = lt.m / glt.m;
                h = h - t.v.times_term(q, qm);
                cof = cof - t.cof.times_term(q, qm);
                reduced = true;
                break;
            }
            if (!reduced) {
                Poly<F> term = Poly<F>::make(ring, {lt});
                remainder.c[hp] = remainder.c[hp] + term;
                h.c[hp] = h.c[hp] - term;
            }
        }
        if (remainder.is_zero()) {
            if (!cof.is_zero()) syz.push_back(cof);
            continue;
        }
        auto lc = remainder.c[remainder.lead_pos()].leading_coefficient().inv();
        g.push_back(Tracked{remainder.scaled(lc), cof.scaled(lc)});
        int t = int(g.size()) - 1;
        for (int k = 0; k < t; ++k) push_pair(k, t);
    }
    (void)rank;
    return syz;
}

/// Syzygies of a list of polynomials (rank-1 case).
template <class F>
std::vector<Vec<F>> syzygies(const RingPtr<F>& ring, const std::vector<Poly<F>>& gens,
                             uint64_t budget = 0) {
    std::vector<Vec<F>> embedded;
    embedded.reserve(gens.size());
    for (const auto& f : gens) {
        Vec<F> v;
        v.c = {f.in_ring(ring)};
        embedded.push_back(std::move(v));
    }
    return module_syzygies(ring, embedded, 1, budget);
}

}  // namespace evo

#endif
