#ifndef EVO_FIELD_HPP
#define EVO_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "evo/error.hpp"

namespace evo {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// GF(p)
// ---------------------------------------------------------------------------

/// An element of a prime field GF(p).  Stores its own modulus so that values
/// from different fields cannot be combined silently.  The value 0 with
/// modulus 0 is the "unattached" zero produced by default construction; it
/// acts as a neutral element and adopts the modulus of the other operand.
class GfElem {
  public:
    GfElem() : v_(0), p_(0) {}
    GfElem(int64_t value, int64_t p);

    int64_t value() const { return v_; }
    int64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    GfElem operator+(const GfElem& o) const;
    GfElem operator-(const GfElem& o) const;
    GfElem operator*(const GfElem& o) const;
    GfElem operator-() const;
    GfElem inv() const;
    GfElem operator/(const GfElem& o) const { return *this * o.inv(); }

    bool operator==(const GfElem& o) const;
    bool operator!=(const GfElem& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

  private:
    int64_t join_modulus(const GfElem& o) const;
    int64_t v_;
    int64_t p_;
};

/// Field descriptor/factory for GF(p).
class GfField {
  public:
    using Elem = GfElem;

    explicit GfField(int64_t p);
    int64_t modulus() const { return p_; }
    int64_t characteristic() const { return p_; }

    Elem zero() const { return Elem(0, p_); }
    Elem one() const { return Elem(1, p_); }
    Elem from_int(int64_t n) const { return Elem(n, p_); }
    /// Parses "123" (general fractions are not elements of the text grammar
    /// over GF(p); residues print as plain integers).
    Elem from_string(const std::string& s) const;

    std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
    bool operator==(const GfField& o) const { return p_ == o.p_; }

  private:
    int64_t p_;
};

bool is_prime(int64_t n);

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

/// An exact rational number, always stored in lowest terms with a positive
/// denominator (boost::multiprecision::cpp_rational maintains that canonical
/// form after every operation).
class RatElem {
  public:
    RatElem() : v_(0) {}
    explicit RatElem(int64_t n) : v_(n) {}
    explicit RatElem(BigRat v) : v_(std::move(v)) {}
    RatElem(BigInt num, BigInt den);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }
    const BigRat& value() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return v_ < 0; }

    RatElem operator+(const RatElem& o) const { return RatElem(v_ + o.v_); }
    RatElem operator-(const RatElem& o) const { return RatElem(v_ - o.v_); }
    RatElem operator*(const RatElem& o) const { return RatElem(v_ * o.v_); }
    RatElem operator-() const { return RatElem(-v_); }
    RatElem inv() const;
    RatElem operator/(const RatElem& o) const { return *this * o.inv(); }

    bool operator==(const RatElem& o) const { return v_ == o.v_; }
    bool operator!=(const RatElem& o) const { return v_ != o.v_; }

    std::string str() const;

  private:
    BigRat v_;
};

class RatField {
  public:
    using Elem = RatElem;

    int64_t characteristic() const { return 0; }
    Elem zero() const { return Elem(); }
    Elem one() const { return Elem(1); }
    Elem from_int(int64_t n) const { return Elem(n); }
    /// Parses "123" or "-4/9".
    Elem from_string(const std::string& s) const;

    std::string name() const { return "QQ"; }
    bool operator==(const RatField&) const { return true; }
};

// ---------------------------------------------------------------------------
// Runtime field descriptor (used by the CLI and fixtures)
// ---------------------------------------------------------------------------

struct FieldDesc {
    bool rational = true;
    int64_t p = 0;  // prime when !rational

    static FieldDesc QQ() { return FieldDesc{true, 0}; }
    static FieldDesc GF(int64_t p) { return FieldDesc{false, p}; }
    std::string name() const {
        return rational ? "QQ" : "GF(" + std::to_string(p) + ")";
    }
    bool operator==(const FieldDesc& o) const {
        return rational == o.rational && p == o.p;
    }
};

}  // namespace evo

#endif
