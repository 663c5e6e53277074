#ifndef EVO_MODPRES_HPP
#define EVO_MODPRES_HPP

#include "evo/ideal.hpp"
#include "evo/matrix.hpp"

namespace evo {

/// A finitely presented module R^n / (columns of the relation matrix); each
/// column is a relation among the n generators.
template <class F>
struct ModulePresentation {
    RingPtr<F> ring;
    size_t gens = 0;
    PolyMatrix<F> relations;  // gens rows x (number of relations) columns
};

namespace detail {

template <class F>
PolyMatrix<F> columns_to_matrix(const RingPtr<F>& ring, size_t nrows,
                                const std::vector<Vec<F>>& cols) {
    PolyMatrix<F> m = PolyMatrix<F>::zero(ring, nrows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < nrows; ++i) m.rows[i][j] = cols[j].c[i];
    return m;
}

template <class F>
std::vector<Vec<F>> matrix_columns(const PolyMatrix<F>& m) {
    std::vector<Vec<F>> cols;
    for (size_t j = 0; j < m.col_count(); ++j) {
        Vec<F> v;
        v.c = m.column(j);
        cols.push_back(std::move(v));
    }
    return cols;
}

/// Greedy irredundant generating set of a submodule; for graded inputs this
/// is a minimal generating set.
template <class F>
std::vector<Vec<F>> minimalize_module_gens(const RingPtr<F>& ring, std::vector<Vec<F>> vs,
                                           size_t rank) {
    std::erase_if(vs, [](const Vec<F>& v) { return v.is_zero(); });
    std::sort(vs.begin(), vs.end(), [](const Vec<F>& a, const Vec<F>& b) {
        int64_t da = -1, db = -1;
        for (const auto& p : a.c) da = std::max(da, p.degree());
        for (const auto& p : b.c) db = std::max(db, p.degree());
        if (da != db) return da < db;
        for (size_t i = 0; i < a.c.size(); ++i) {
            int c = a.c[i].compare(b.c[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    bool removed = true;
    while (removed) {
        removed = false;
        for (size_t i = 0; i < vs.size(); ++i) {
            std::vector<Vec<F>> others;
            others.reserve(vs.size() - 1);
            for (size_t j = 0; j < vs.size(); ++j)
                if (j != i) others.push_back(vs[j]);
            if (others.empty()) break;
            auto mb = module_buchberger(ring, others, rank);
            if (module_normal_form(vs[i], mb).is_zero()) {
                vs.erase(vs.begin() + long(i));
                removed = true;
                break;
            }
        }
    }
    return vs;
}

}  // namespace detail

/// Presents the module generated by `gens` (an ideal given by a generator
/// list): relations are the syzygies among the generators.
template <class F>
ModulePresentation<F> present_polys(const RingPtr<F>& ring, const std::vector<Poly<F>>& gens) {
    auto syz = syzygies(ring, gens);
    return ModulePresentation<F>{ring, gens.size(),
                                 detail::columns_to_matrix(ring, gens.size(), syz)};
}

/// Presentation of I as a module on a minimal generating set (Fitting
/// invariants do not depend on the choice).
template <class F>
ModulePresentation<F> present_ideal(const Ideal<F>& I) {
    return present_polys(I.ring(), min_generators(I));
}

/// Presentation of I/(x) on the given generators f_1..f_n of I: the relation
/// columns are the first n coordinates of the syzygies of (f_1,...,f_n, x).
template <class F>
ModulePresentation<F> present_ideal_quotient(const Ideal<F>& I, const Poly<F>& x) {
    if (!I.contains(x))
        throw PreconditionError("present_ideal_quotient: element does not lie in the ideal");
    const RingPtr<F>& ring = I.ring();
    std::vector<Poly<F>> gens = I.gens();
    size_t n = gens.size();
    gens.push_back(x.in_ring(ring));
    auto syz = syzygies(ring, gens);
    std::vector<Vec<F>> cols;
    for (const auto& s : syz) {
        Vec<F> v;
        v.c.assign(s.c.begin(), s.c.begin() + long(n));
        if (!v.is_zero()) cols.push_back(std::move(v));
    }
    return ModulePresentation<F>{ring, n, detail::columns_to_matrix(ring, n, cols)};
}

/// F_i(M) = ideal of (n-i) x (n-i) minors of the relation matrix; the unit
/// ideal once n-i <= 0, the zero ideal when n-i exceeds the available
/// relations.
template <class F>
Ideal<F> fitting_ideal(const ModulePresentation<F>& pres, size_t i) {
    int64_t k = int64_t(pres.gens) - int64_t(i);
    if (k <= 0) return unit_ideal(pres.ring);
    if (size_t(k) > pres.relations.col_count()) return Ideal<F>(pres.ring, {});
    return Ideal<F>(pres.ring, minors(pres.relations, size_t(k)));
}

/// Fitting ideal of an ideal viewed as a module over its minimal generators.
template <class F>
Ideal<F> fitting_of_ideal(const Ideal<F>& I, size_t i) {
    return fitting_ideal(present_ideal(I), i);
}

// ---------------------------------------------------------------------------
// Free resolutions
// ---------------------------------------------------------------------------

template <class F>
struct FreeResolution {
    /// maps[0] is the 1 x n row of generators; maps[k] presents the kernel
    /// of maps[k-1].  Composition of consecutive maps is zero.
    std::vector<PolyMatrix<F>> maps;
    bool complete = false;  // reached a zero syzygy module within the bound
    size_t length() const { return maps.size(); }
};

/// Iterated syzygies of R/I's generators, truncated at `bound` maps or at
/// the first zero syzygy module.  Generator sets are minimalized at every
/// step, so for graded input the result is a minimal resolution and its
/// length equals the projective dimension.
template <class F>
FreeResolution<F> free_resolution(const Ideal<F>& I, size_t bound) {
    if (bound < 1) throw PreconditionError("resolution bound must be >= 1");
    const RingPtr<F>& ring = I.ring();
    FreeResolution<F> res;
    std::vector<Poly<F>> gens = min_generators(I);
    if (gens.empty()) {
        res.complete = true;
        return res;
    }
    PolyMatrix<F> d1 = PolyMatrix<F>::zero(ring, 1, gens.size());
    for (size_t j = 0; j < gens.size(); ++j) d1.rows[0][j] = gens[j];
    res.maps.push_back(std::move(d1));

    std::vector<Vec<F>> current;  // columns of the last map, as module elements
    for (const auto& gpoly : gens) {
        Vec<F> v;
        v.c = {gpoly};
        current.push_back(std::move(v));
    }
    size_t rank = 1;
    while (res.maps.size() < bound) {
        size_t next_rank = current.size();
        auto syz = module_syzygies(ring, current, rank);
        syz = detail::minimalize_module_gens(ring, std::move(syz), next_rank);
        if (syz.empty()) {
            res.complete = true;
            return res;
        }
        res.maps.push_back(detail::columns_to_matrix(ring, next_rank, syz));
        current = std::move(syz);
        rank = next_rank;
    }
    // bound reached: complete only if the last syzygy module vanishes
    auto tail = module_syzygies(ring, current, current.size());
    tail = detail::minimalize_module_gens(ring, std::move(tail), current.size());
    res.complete = tail.empty();
    return res;
}

/// Canonical module of R/I for a perfect ideal I of codimension c (finite
/// free resolution of length exactly c): the cokernel of the transpose of
/// the last resolution map.
template <class F>
ModulePresentation<F> canonical_module(const Ideal<F>& I) {
    int64_t c = codimension(I);
    FreeResolution<F> res = free_resolution(I, size_t(c) + 1);
    if (!res.complete || res.length() != size_t(c))
        throw PreconditionError(
            "canonical module: resolution length differs from codimension (ideal not "
            "perfect, or not graded)");
    const PolyMatrix<F>& last = res.maps.back();
    return ModulePresentation<F>{I.ring(), last.col_count(), last.transpose()};
}

}  // namespace evo

#endif
