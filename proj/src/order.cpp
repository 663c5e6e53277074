#include "evo/order.hpp"

#include <numeric>
#include <sstream>

namespace evo {

MonomialOrder MonomialOrder::lex(std::vector<int> seq) {
    MonomialOrder o;
    o.layers_ = {Layer{LayerKind::Lex, std::move(seq), {}}};
    return o;
}

MonomialOrder MonomialOrder::grevlex(std::vector<int> seq) {
    MonomialOrder o;
    o.layers_ = {Layer{LayerKind::GrevLex, std::move(seq), {}}};
    return o;
}

MonomialOrder MonomialOrder::weighted(std::vector<int64_t> weights, MonomialOrder tie) {
    MonomialOrder o;
    o.layers_.clear();
    o.layers_.push_back(Layer{LayerKind::Weight, {}, std::move(weights)});
    for (auto& l : tie.layers_) o.layers_.push_back(std::move(l));
    return o;
}

MonomialOrder MonomialOrder::elimination(const std::vector<int>& front, size_t arity,
                                         MonomialOrder back_tie) {
    std::vector<bool> in_front(arity, false);
    for (int v : front) in_front[size_t(v)] = true;
    std::vector<int> back;
    for (size_t i = 0; i < arity; ++i)
        if (!in_front[i]) back.push_back(int(i));

    MonomialOrder o;
    o.layers_.clear();
    o.layers_.push_back(Layer{LayerKind::GrevLex, front, {}});
    // restrict the requested back order to the remaining variables
    for (auto& l : back_tie.layers_) {
        Layer restricted = l;
        if (restricted.seq.empty()) restricted.seq = back;
        o.layers_.push_back(std::move(restricted));
    }
    return o;
}

MonomialOrder MonomialOrder::from_layers(std::vector<Layer> layers) {
    MonomialOrder o;
    o.layers_ = std::move(layers);
    return o;
}

namespace {

int sign64(int64_t v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int compare_lex(const Monomial& a, const Monomial& b, const std::vector<int>& seq) {
    if (seq.empty()) {
        for (size_t i = 0; i < a.arity(); ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
    }
    for (int i : seq)
        if (a[size_t(i)] != b[size_t(i)]) return a[size_t(i)] > b[size_t(i)] ? 1 : -1;
    return 0;
}

int compare_grevlex(const Monomial& a, const Monomial& b, const std::vector<int>& seq) {
    if (seq.empty()) {
        int64_t da = a.degree(), db = b.degree();
        if (da != db) return da > db ? 1 : -1;
        for (size_t i = a.arity(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
    }
    int64_t da = 0, db = 0;
    for (int i : seq) {
        da += a[size_t(i)];
        db += b[size_t(i)];
    }
    if (da != db) return da > db ? 1 : -1;
    for (size_t k = seq.size(); k-- > 0;) {
        size_t i = size_t(seq[k]);
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    for (const Layer& l : layers_) {
        int c = 0;
        switch (l.kind) {
            case LayerKind::Lex:
                c = compare_lex(a, b, l.seq);
                break;
            case LayerKind::GrevLex:
                c = compare_grevlex(a, b, l.seq);
                break;
            case LayerKind::Weight:
                c = sign64(a.weighted_degree(l.weights) - b.weighted_degree(l.weights));
                break;
        }
        if (c != 0) return c;
    }
    return 0;
}

std::string MonomialOrder::key() const {
    std::ostringstream os;
    for (const Layer& l : layers_) {
        switch (l.kind) {
            case LayerKind::Lex: os << "lex"; break;
            case LayerKind::GrevLex: os << "grevlex"; break;
            case LayerKind::Weight: os << "w"; break;
        }
        os << '[';
        if (l.kind == LayerKind::Weight)
            for (size_t i = 0; i < l.weights.size(); ++i)
                os << (i ? "," : "") << l.weights[i];
        else
            for (size_t i = 0; i < l.seq.size(); ++i) os << (i ? "," : "") << l.seq[i];
        os << ']';
    }
    return os.str();
}

}  // namespace evo
