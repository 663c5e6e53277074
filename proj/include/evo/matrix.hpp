#ifndef EVO_MATRIX_HPP
#define EVO_MATRIX_HPP

#include <functional>
#include <map>

#include "evo/poly.hpp"

namespace evo {

/// A rectangular matrix of polynomials over one ring.
template <class F>
struct PolyMatrix {
    RingPtr<F> ring;
    std::vector<std::vector<Poly<F>>> rows;

    size_t row_count() const { return rows.size(); }
    size_t col_count() const { return rows.empty() ? 0 : rows[0].size(); }

    static PolyMatrix make(RingPtr<F> ring, std::vector<std::vector<Poly<F>>> rows) {
        PolyMatrix m{std::move(ring), std::move(rows)};
        for (const auto& r : m.rows)
            if (r.size() != m.col_count()) throw Error("matrix is not rectangular");
        return m;
    }

    static PolyMatrix zero(RingPtr<F> ring, size_t nrows, size_t ncols) {
        std::vector<std::vector<Poly<F>>> rows(
            nrows, std::vector<Poly<F>>(ncols, Poly<F>::zero(ring)));
        return PolyMatrix{std::move(ring), std::move(rows)};
    }

    const Poly<F>& at(size_t i, size_t j) const { return rows[i][j]; }

    PolyMatrix transpose() const {
        PolyMatrix t = zero(ring, col_count(), row_count());
        for (size_t i = 0; i < row_count(); ++i)
            for (size_t j = 0; j < col_count(); ++j) t.rows[j][i] = rows[i][j];
        return t;
    }

    std::vector<Poly<F>> column(size_t j) const {
        std::vector<Poly<F>> c;
        c.reserve(row_count());
        for (size_t i = 0; i < row_count(); ++i) c.push_back(rows[i][j]);
        return c;
    }
};

template <class F>
PolyMatrix<F> mat_mul(const PolyMatrix<F>& a, const PolyMatrix<F>& b) {
    if (a.col_count() != b.row_count()) throw Error("matrix shape mismatch");
    PolyMatrix<F> out = PolyMatrix<F>::zero(a.ring, a.row_count(), b.col_count());
    for (size_t i = 0; i < a.row_count(); ++i)
        for (size_t j = 0; j < b.col_count(); ++j) {
            Poly<F> s = Poly<F>::zero(a.ring);
            for (size_t k = 0; k < a.col_count(); ++k) s = s + a.at(i, k) * b.at(k, j);
            out.rows[i][j] = s;
        }
    return out;
}

namespace detail {

/// Determinants of square submatrices by Laplace expansion, memoized on
/// (row set, column set) so subminors are shared across the enumeration.
template <class F>
class MinorTable {
  public:
    explicit MinorTable(const PolyMatrix<F>& a) : a_(a) {}

    Poly<F> det(uint64_t rowmask, uint64_t colmask) {
        int k = __builtin_popcountll(rowmask);
        if (k == 0) return Poly<F>::constant(a_.ring, a_.ring->field.one());
        auto key = std::make_pair(rowmask, colmask);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        size_t r = size_t(__builtin_ctzll(rowmask));
        uint64_t rest = rowmask & (rowmask - 1);
        Poly<F> sum = Poly<F>::zero(a_.ring);
        bool negate = false;
        for (uint64_t cm = colmask; cm; cm &= cm - 1) {
            size_t c = size_t(__builtin_ctzll(cm));
            const Poly<F>& entry = a_.at(r, c);
            if (!entry.is_zero()) {
                Poly<F> sub = det(rest, colmask & ~(uint64_t(1) << c));
                Poly<F> term = entry * sub;
                sum = negate ? sum - term : sum + term;
            }
            negate = !negate;
        }
        memo_.emplace(key, sum);
        return sum;
    }

  private:
    const PolyMatrix<F>& a_;
    std::map<std::pair<uint64_t, uint64_t>, Poly<F>> memo_;
};

inline void enumerate_masks(size_t n, size_t k, const std::function<void(uint64_t)>& fn) {
    if (k > n) return;
    // classic Gosper iteration over k-subsets in ascending order
    uint64_t mask = (k == 0) ? 0 : ((uint64_t(1) << k) - 1);
    if (k == 0) {
        fn(0);
        return;
    }
    uint64_t limit = uint64_t(1) << n;
    while (mask < limit) {
        fn(mask);
        uint64_t c = mask & -mask;
        uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

}  // namespace detail

/// All k x k minors (deduplicated, zeros dropped), in a deterministic order.
template <class F>
std::vector<Poly<F>> minors(const PolyMatrix<F>& a, size_t k) {
    if (k < 1 || k > std::min(a.row_count(), a.col_count()))
        throw PreconditionError("minor size out of range");
    if (a.row_count() > 60 || a.col_count() > 60) throw Error("matrix too large for minors");
    detail::MinorTable<F> table(a);
    std::vector<Poly<F>> out;
    detail::enumerate_masks(a.row_count(), k, [&](uint64_t rm) {
        detail::enumerate_masks(a.col_count(), k, [&](uint64_t cm) {
            Poly<F> d = table.det(rm, cm);
            if (d.is_zero()) return;
            for (const auto& seen : out)
                if (seen == d) return;
            out.push_back(std::move(d));
        });
    });
    return out;
}

}  // namespace evo

#endif
