#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace bsg {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. All solver arithmetic goes through this type; floating
/// point appears only in display code and statistics.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long long v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(static_cast<long>(v)) {}        // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& q);

    /// Parses "a/b" or "a". Throws InvalidInstanceError on garbage or b == 0.
    static Rational from_string(const std::string& s);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r(*this); r.q_ = -r.q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// "a/b" when b != 1, plain "a" otherwise.
    std::string to_string() const;
    /// Display only; never used in solver comparisons.
    double to_double() const { return q_.get_d(); }

    const mpq_class& raw() const { return q_; }

  private:
    mpq_class q_;  // invariant: canonical form, positive denominator
};

}  // namespace bsg
