#include "bsg/rational.hpp"

#include "bsg/errors.hpp"

namespace bsg {

Rational::Rational(long long num, long long den) {
    if (den == 0) throw InvalidInstanceError("rational with zero denominator");
    q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw InvalidInstanceError("rational with zero denominator");
    q_ = mpq_class(num) / mpq_class(den);
    q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidInstanceError("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(s);
            return Rational(n, mpz_class(1));
        }
        mpz_class n(s.substr(0, slash));
        mpz_class d(s.substr(slash + 1));
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw InvalidInstanceError("cannot parse rational: " + s);
    }
}

std::string Rational::to_string() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace bsg
