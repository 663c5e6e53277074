#ifndef EVO_TEST_HELPERS_HPP
#define EVO_TEST_HELPERS_HPP

#include <string>
#include <vector>

#include "evo/format.hpp"
#include "evo/ring.hpp"

namespace evotest {

inline evo::RingPtr<evo::GfField> gf_ring(int64_t p, std::vector<std::string> vars,
                                          evo::MonomialOrder order = evo::MonomialOrder::grevlex(),
                                          std::vector<int64_t> weights = {}) {
    return evo::make_ring(evo::GfField(p), std::move(vars), std::move(order), std::move(weights));
}

inline evo::RingPtr<evo::RatField> qq_ring(std::vector<std::string> vars,
                                           evo::MonomialOrder order = evo::MonomialOrder::grevlex(),
                                           std::vector<int64_t> weights = {}) {
    return evo::make_ring(evo::RatField(), std::move(vars), std::move(order), std::move(weights));
}

template <class F>
evo::Poly<F> P(const evo::RingPtr<F>& r, const std::string& s) {
    return evo::parse_poly(s, r);
}

template <class F>
std::vector<evo::Poly<F>> PL(const evo::RingPtr<F>& r, const std::vector<std::string>& ss) {
    std::vector<evo::Poly<F>> out;
    for (const auto& s : ss) out.push_back(evo::parse_poly(s, r));
    return out;
}

}  // namespace evotest

#endif
