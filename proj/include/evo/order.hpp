#ifndef EVO_ORDER_HPP
#define EVO_ORDER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "evo/monomial.hpp"

namespace evo {

/// A monomial order, built from comparison layers applied in sequence; the
/// first layer that distinguishes two monomials decides.  Every layer
/// compares exponent differences only, which makes any stack multiplicative;
/// the factory functions below only build stacks that are total orders with
/// 1 minimal.
///
///   lex(seq)      first differing exponent along seq decides
///   grevlex(seq)  total degree over seq, ties broken by the smallest
///                 exponent difference scanning seq from its end
///   weight(w)     compares the w-weighted degree (one weight per variable)
///
/// An empty seq means "all variables in ring order".  Elimination orders are
/// stacks [grevlex(front), grevlex(rest)].
class MonomialOrder {
  public:
    enum class LayerKind { Lex, GrevLex, Weight };
    struct Layer {
        LayerKind kind;
        std::vector<int> seq;          // variable positions; empty = all
        std::vector<int64_t> weights;  // Weight layers only, indexed by variable
    };

    MonomialOrder() : layers_{Layer{LayerKind::GrevLex, {}, {}}} {}

    static MonomialOrder lex(std::vector<int> seq = {});
    static MonomialOrder grevlex(std::vector<int> seq = {});
    /// weight-refined order: weighted degree first, then the tie order
    static MonomialOrder weighted(std::vector<int64_t> weights, MonomialOrder tie = grevlex());
    /// block order eliminating `front`: front block first (grevlex inside),
    /// then `back_tie` on the remaining variables
    static MonomialOrder elimination(const std::vector<int>& front, size_t arity,
                                     MonomialOrder back_tie = MonomialOrder());
    static MonomialOrder from_layers(std::vector<Layer> layers);

    /// +1 if a > b, -1 if a < b, 0 if equal under this order
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    /// Stable textual key; used for Groebner-basis caching and equality.
    std::string key() const;
    bool operator==(const MonomialOrder& o) const { return key() == o.key(); }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

    const std::vector<Layer>& layers() const { return layers_; }

  private:
    std::vector<Layer> layers_;
};

}  // namespace evo

#endif
