#ifndef EVO_FORMAT_HPP
#define EVO_FORMAT_HPP

#include <sstream>
#include <string>

#include "evo/poly.hpp"

namespace evo {

/// Character-level scanner shared by the polynomial and job parsers.
class TextScanner {
  public:
    explicit TextScanner(std::string text) : text_(std::move(text)) {}

    void skip_space();
    bool at_end();
    char peek();
    bool consume(char c);
    void expect(char c, const char* what);
    bool lookahead_word(const std::string& w);
    std::string ident();    // [A-Za-z_][A-Za-z0-9_]*
    std::string digits();   // [0-9]+
    size_t pos() const { return pos_; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  private:
    std::string text_;
    size_t pos_ = 0;
};

// --- coefficient rendering helpers -----------------------------------------

inline bool coef_negative(const GfElem&) { return false; }
inline bool coef_negative(const RatElem& c) { return c.is_negative(); }
inline GfElem coef_abs(const GfElem& c) { return c; }
inline RatElem coef_abs(const RatElem& c) { return c.is_negative() ? -c : c; }

inline GfElem coef_from_tokens(const GfField& f, const std::string& num,
                               const std::string& den, const TextScanner& sc) {
    if (!den.empty()) throw ParseError("fractional coefficient over " + f.name(), sc.pos());
    return f.from_string(num);
}
inline RatElem coef_from_tokens(const RatField& f, const std::string& num,
                                const std::string& den, const TextScanner&) {
    return den.empty() ? f.from_string(num) : RatElem(BigInt(num), BigInt(den));
}

// --- printing ---------------------------------------------------------------

template <class F>
std::string monomial_str(const Ring<F>& ring, const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < m.arity(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << '*';
        os << ring.vars[i];
        if (m[i] > 1) os << '^' << m[i];
        first = false;
    }
    return os.str();
}

template <class F>
std::string to_string(const Poly<F>& f) {
    if (f.is_zero()) return "0";
    const auto& ring = *f.ring();
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.terms()) {
        bool neg = coef_negative(t.c);
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        auto c = coef_abs(t.c);
        if (t.m.is_one()) {
            os << c.str();
        } else {
            if (!c.is_one()) os << c.str() << '*';
            os << monomial_str(ring, t.m);
        }
        first = false;
    }
    return os.str();
}

// --- parsing ----------------------------------------------------------------

/// Parses the polynomial grammar:
///   poly   := ['-'] term (('+'|'-') term)*
///   term   := coef ['*' factors] | factors
///   coef   := digits ['/' digits]
///   factors:= var ['^' digits] ('*' var ['^' digits])*
/// Variables must be names declared by the ring. Prints and reparses exactly.
template <class F>
Poly<F> parse_poly_at(TextScanner& sc, const RingPtr<F>& ring) {
    using Term = typename Poly<F>::Term;
    std::vector<Term> acc;
    sc.skip_space();
    bool neg = sc.consume('-');
    while (true) {
        sc.skip_space();
        typename F::Elem coef = ring->field.one();
        bool have_coef = false;
        if (isdigit(sc.peek())) {
            std::string num = sc.digits(), den;
            if (sc.consume('/')) den = sc.digits();
            coef = coef_from_tokens(ring->field, num, den, sc);
            have_coef = true;
        }
        Monomial m(ring->arity());
        bool have_var = false;
        while (true) {
            sc.skip_space();
            if (have_coef || have_var) {
                size_t save = sc.pos();
                if (!sc.consume('*')) break;
                sc.skip_space();
                if (!isalpha(sc.peek()) && sc.peek() != '_') {
                    (void)save;
                    sc.fail("expected variable after '*'");
                }
            } else if (!isalpha(sc.peek()) && sc.peek() != '_') {
                sc.fail("expected coefficient or variable");
            }
            std::string name = sc.ident();
            int vi = ring->index_of(name);
            if (vi < 0) sc.fail("unknown variable '" + name + "'");
            int32_t e = 1;
            if (sc.consume('^')) {
                std::string d = sc.digits();
                e = int32_t(std::stol(d));
            }
            m.set(size_t(vi), m[size_t(vi)] + e);
            have_var = true;
        }
        if (!have_coef && !have_var) sc.fail("empty term");
        if (neg) coef = -coef;
        acc.push_back(Term{std::move(coef), std::move(m)});
        sc.skip_space();
        if (sc.consume('+'))
            neg = false;
        else if (sc.consume('-'))
            neg = true;
        else
            break;
    }
    return Poly<F>::make(ring, std::move(acc));
}

template <class F>
Poly<F> parse_poly(const std::string& text, const RingPtr<F>& ring) {
    TextScanner sc(text);
    Poly<F> p = parse_poly_at(sc, ring);
    sc.skip_space();
    if (!sc.at_end()) sc.fail("trailing input after polynomial");
    return p;
}

}  // namespace evo

#endif
