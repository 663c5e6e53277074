#include "evo/field.hpp"

namespace evo {

namespace {

int64_t mod_reduce(int64_t v, int64_t p) {
    int64_t r = v % p;
    return r < 0 ? r + p : r;
}

// Extended Euclid: returns x with a*x = 1 (mod p), for 0 < a < p.
int64_t mod_inverse(int64_t a, int64_t p) {
    int64_t old_r = a, r = p;
    int64_t old_s = 1, s = 0;
    while (r != 0) {
        int64_t q = old_r / r;
        int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    return mod_reduce(old_s, p);
}

}  // namespace

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

GfElem::GfElem(int64_t value, int64_t p) : v_(mod_reduce(value, p)), p_(p) {
    if (p < 2) throw Error("GF modulus must be >= 2");
}

int64_t GfElem::join_modulus(const GfElem& o) const {
    if (p_ == 0) return o.p_;
    if (o.p_ == 0) return p_;
    if (p_ != o.p_)
        throw FieldMismatchError("mixed GF moduli: " + std::to_string(p_) +
                                 " vs " + std::to_string(o.p_));
    return p_;
}

GfElem GfElem::operator+(const GfElem& o) const {
    int64_t p = join_modulus(o);
    if (p == 0) return GfElem();
    return GfElem(v_ + o.v_, p);
}

GfElem GfElem::operator-(const GfElem& o) const {
    int64_t p = join_modulus(o);
    if (p == 0) return GfElem();
    return GfElem(v_ - o.v_, p);
}

GfElem GfElem::operator*(const GfElem& o) const {
    int64_t p = join_modulus(o);
    if (p == 0) return GfElem();
    // residues < 2^31, so the product fits in int64_t
    return GfElem(v_ * o.v_, p);
}

GfElem GfElem::operator-() const {
    if (p_ == 0) return GfElem();
    return GfElem(-v_, p_);
}

GfElem GfElem::inv() const {
    if (v_ == 0) throw DivisionByZeroError("inverse of 0 in " +
                                           (p_ ? "GF(" + std::to_string(p_) + ")" : std::string("GF")));
    return GfElem(mod_inverse(v_, p_), p_);
}

bool GfElem::operator==(const GfElem& o) const {
    if (p_ && o.p_ && p_ != o.p_)
        throw FieldMismatchError("comparing elements of GF(" + std::to_string(p_) +
                                 ") and GF(" + std::to_string(o.p_) + ")");
    return v_ == o.v_;
}

GfField::GfField(int64_t p) : p_(p) {
    if (!is_prime(p)) throw Error("GF modulus " + std::to_string(p) + " is not prime");
    if (p > (int64_t(1) << 31)) throw Error("GF modulus too large");
}

GfElem GfField::from_string(const std::string& s) const {
    return from_int(std::stoll(s));
}

RatElem::RatElem(BigInt num, BigInt den) {
    if (den.is_zero()) throw DivisionByZeroError("rational with zero denominator");
    v_ = BigRat(std::move(num)) / BigRat(std::move(den));
}

RatElem RatElem::inv() const {
    if (is_zero()) throw DivisionByZeroError("inverse of 0 in QQ");
    return RatElem(BigRat(1) / v_);
}

std::string RatElem::str() const {
    if (denominator() == 1) return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

RatElem RatField::from_string(const std::string& s) const {
    auto slash = s.find('/');
    if (slash == std::string::npos) return RatElem(BigRat(BigInt(s)));
    return RatElem(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

}  // namespace evo
