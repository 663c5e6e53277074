#ifndef EVO_RING_HPP
#define EVO_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "evo/field.hpp"
#include "evo/order.hpp"

namespace evo {

/// A polynomial ring context: named variables over an exact field, an
/// optional positive weight per variable, and the monomial order under which
/// every polynomial of the ring keeps its terms sorted.  Local computations
/// at the ideal of variables are done in this graded model; the maximal
/// ideal is the ideal generated by the variables.
template <class F>
struct Ring {
    F field;
    std::vector<std::string> vars;
    std::vector<int64_t> weights;  // empty = unweighted
    MonomialOrder order;

    size_t arity() const { return vars.size(); }
    bool has_weights() const { return !weights.empty(); }

    /// Same variables/field/weights (order may differ): polynomials can be
    /// converted between the two contexts by re-sorting terms.
    bool compatible(const Ring& o) const {
        return field == o.field && vars == o.vars && weights == o.weights;
    }
    bool operator==(const Ring& o) const {
        return compatible(o) && order == o.order;
    }

    int index_of(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return int(i);
        return -1;
    }
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> vars,
                     MonomialOrder order = MonomialOrder::grevlex(),
                     std::vector<int64_t> weights = {}) {
    if (vars.empty()) throw Error("ring needs at least one variable");
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw Error("duplicate variable name " + vars[i]);
    if (!weights.empty()) {
        if (weights.size() != vars.size())
            throw Error("weight count does not match variable count");
        for (int64_t w : weights)
            if (w < 1) throw Error("weights must be >= 1");
    }
    return std::shared_ptr<Ring<F>>(new Ring<F>{
        std::move(field), std::move(vars), std::move(weights), std::move(order)});
}

/// Sibling ring: same variables, different order.
template <class F>
RingPtr<F> with_order(const RingPtr<F>& r, MonomialOrder order) {
    if (r->order == order) return r;
    auto s = std::make_shared<Ring<F>>(*r);
    s->order = std::move(order);
    return s;
}

}  // namespace evo

#endif
