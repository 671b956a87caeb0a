#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pms {

using BigInt = mpz_class;

/// Exact rational scalar. Every quantity on a verdict path (distributions,
/// eigenvalues, Krein sums) stays in this type; zero tests are exact, no
/// floating point is ever involved.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long value) : v_(value) {}  // NOLINT: implicit by design
    Rational(int value) : v_(static_cast<long>(value)) {}
    Rational(const BigInt& value) : v_(value) {}
    Rational(const BigInt& num, const BigInt& den) : v_(num, den) { v_.canonicalize(); }

    const BigInt& num() const { return v_.get_num(); }
    const BigInt& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// "-3/2" for proper fractions, "7" for integers.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    /// Display only; never feeds back into any decision.
    double approx() const { return v_.get_d(); }

private:
    mpq_class v_;
};

}  // namespace pms
