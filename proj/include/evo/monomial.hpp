#ifndef EVO_MONOMIAL_HPP
#define EVO_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "evo/error.hpp"

namespace evo {

/// A monomial as a dense exponent vector (one entry per ring variable).
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(size_t arity) : e_(arity, 0) {}
    explicit Monomial(std::vector<int32_t> exps) : e_(std::move(exps)) {}

    size_t arity() const { return e_.size(); }
    int32_t operator[](size_t i) const { return e_[i]; }
    void set(size_t i, int32_t v) { e_[i] = v; }
    const std::vector<int32_t>& exponents() const { return e_; }

    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](int32_t x) { return x == 0; });
    }

    int64_t degree() const {
        return std::accumulate(e_.begin(), e_.end(), int64_t(0));
    }

    int64_t weighted_degree(std::span<const int64_t> w) const {
        int64_t d = 0;
        for (size_t i = 0; i < e_.size(); ++i) d += w[i] * e_[i];
        return d;
    }

    bool divides(const Monomial& m) const {
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += m.e_[i];
        return r;
    }

    /// Exact quotient; caller guarantees m.divides(*this).
    Monomial operator/(const Monomial& m) const {
        Monomial r(*this);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= m.e_[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
        return r;
    }

    bool coprime_with(const Monomial& b) const {
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && b.e_[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

  private:
    std::vector<int32_t> e_;
};

}  // namespace evo

#endif
