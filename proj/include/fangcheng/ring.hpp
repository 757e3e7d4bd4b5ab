#pragma once

// Exact coefficient arithmetic. Every tableau computation in this project runs
// over one of three rings: arbitrary-precision integers, normalized rationals,
// or multivariate integer polynomials (multipoly.hpp). The Ring<T> wrapper
// gives them one contract -- add/sub/mul/exact_div plus an optional operation
// tally -- so the elimination code is ring-agnostic.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "fangcheng/errors.hpp"

namespace fangcheng {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Nonnegative gcd; gcd(0,0) = 0.
inline Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

// Bit length of |a|; 0 for a = 0.
inline unsigned bit_length(const Integer& a) {
    if (a.is_zero())
        return 0;
    return static_cast<unsigned>(boost::multiprecision::msb(boost::multiprecision::abs(a))) + 1;
}

inline std::string to_decimal(const Integer& a) { return a.str(); }

// "37/4", or just "9" when the denominator is one.
inline std::string to_decimal(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1)
        s += "/" + denominator(q).str();
    return s;
}

inline Rational to_rational(const Integer& a) { return Rational(a); }
inline const Rational& to_rational(const Rational& q) { return q; }

// Counts of ring operations performed through a Ring<T> context. One tally is
// owned per elimination run and passed explicitly; there is no global state.
struct OpTally {
    std::uint64_t add = 0;
    std::uint64_t sub = 0;
    std::uint64_t mul = 0;
    std::uint64_t div = 0;

    std::uint64_t addsub() const { return add + sub; }
    std::uint64_t muldiv() const { return mul + div; }
    std::uint64_t total() const { return add + sub + mul + div; }

    OpTally& operator+=(const OpTally& o) {
        add += o.add;
        sub += o.sub;
        mul += o.mul;
        div += o.div;
        return *this;
    }
    friend OpTally operator-(OpTally a, const OpTally& b) {
        a.add -= b.add;
        a.sub -= b.sub;
        a.mul -= b.mul;
        a.div -= b.div;
        return a;
    }
    friend bool operator==(const OpTally&, const OpTally&) = default;
};

// Per-ring glue. Specialized for Integer, Rational (_like/_one variants take an
// exemplar so MultiPoly can carry its variable count through).
template <typename T>
struct RingTraits;

template <>
struct RingTraits<Integer> {
    static constexpr bool is_field = false;
    static constexpr const char* name = "integer";

    static bool is_zero(const Integer& a) { return a.is_zero(); }
    static bool is_one(const Integer& a) { return a == 1; }
    static Integer zero_like(const Integer&) { return Integer(0); }
    static Integer one_like(const Integer&) { return Integer(1); }
    static Integer add(const Integer& a, const Integer& b) { return a + b; }
    static Integer sub(const Integer& a, const Integer& b) { return a - b; }
    static Integer mul(const Integer& a, const Integer& b) { return a * b; }
    static Integer exact_div(const Integer& a, const Integer& b) {
        if (b.is_zero())
            throw DivideByZero();
        Integer q, r;
        boost::multiprecision::divide_qr(a, b, q, r);
        if (!r.is_zero())
            throw InexactDivision(a.str(), b.str());
        return q;
    }
    static std::string str(const Integer& a) { return to_decimal(a); }
    static unsigned bit_measure(const Integer& a) { return bit_length(a); }
};

template <>
struct RingTraits<Rational> {
    static constexpr bool is_field = true;
    static constexpr const char* name = "rational";

    static bool is_zero(const Rational& a) { return a.is_zero(); }
    static bool is_one(const Rational& a) { return a == 1; }
    static Rational zero_like(const Rational&) { return Rational(0); }
    static Rational one_like(const Rational&) { return Rational(1); }
    static Rational add(const Rational& a, const Rational& b) { return a + b; }
    static Rational sub(const Rational& a, const Rational& b) { return a - b; }
    static Rational mul(const Rational& a, const Rational& b) { return a * b; }
    static Rational exact_div(const Rational& a, const Rational& b) {
        if (b.is_zero())
            throw DivideByZero();
        return a / b;
    }
    static std::string str(const Rational& a) { return to_decimal(a); }
    // Size of a rational entry: the larger of the numerator/denominator lengths.
    static unsigned bit_measure(const Rational& a) {
        unsigned nb = bit_length(numerator(a));
        unsigned db = bit_length(denominator(a));
        return nb > db ? nb : db;
    }
};

// Ring operations with an optional tally sink. Only successful operations are
// counted; callers decide which operations are worth performing (the
// elimination kernels do not charge for multiplying by a structural zero).
template <typename T>
class Ring {
public:
    using Traits = RingTraits<T>;

    Ring() = default;
    explicit Ring(OpTally* tally) : tally_(tally) {}

    static bool is_zero(const T& a) { return Traits::is_zero(a); }
    static bool is_one(const T& a) { return Traits::is_one(a); }
    static T zero_like(const T& a) { return Traits::zero_like(a); }
    static T one_like(const T& a) { return Traits::one_like(a); }

    T add(const T& a, const T& b) const {
        T r = Traits::add(a, b);
        if (tally_)
            ++tally_->add;
        return r;
    }
    T sub(const T& a, const T& b) const {
        T r = Traits::sub(a, b);
        if (tally_)
            ++tally_->sub;
        return r;
    }
    T mul(const T& a, const T& b) const {
        T r = Traits::mul(a, b);
        if (tally_)
            ++tally_->mul;
        return r;
    }
    T exact_div(const T& a, const T& b) const {
        T r = Traits::exact_div(a, b);
        if (tally_)
            ++tally_->div;
        return r;
    }

    OpTally* tally() const { return tally_; }

private:
    OpTally* tally_ = nullptr;
};

} // namespace fangcheng
