#include "dops/specfun.hpp"

#include "dops/errors.hpp"

namespace dops {

namespace {

// Lower q-parameters are rejected eagerly up to this exponent and lazily beyond it.
constexpr std::size_t kEagerLowerCheck = 64;

bool is_nonpositive_integer(const Scalar &x) {
    return x.is_rational() && x.u().is_integer() && x.u().sign() <= 0;
}

Scalar sign_power(std::size_t n) { return (n % 2 == 0) ? Scalar(1) : Scalar(-1); }

} // namespace

Scalar pochhammer(const Scalar &x, std::size_t n) {
    Scalar p(1);
    for (std::size_t k = 0; k < n; ++k) {
        p *= x + Scalar(static_cast<long>(k));
    }
    return p;
}

Scalar q_shifted(const Scalar &x, const Scalar &q, std::size_t n) {
    Scalar p(1);
    Scalar xqk = x;
    for (std::size_t k = 0; k < n; ++k) {
        p *= Scalar(1) - xqk;
        xqk *= q;
    }
    return p;
}

Rational factorial(std::size_t n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f, mpz_class(1));
}

CoeffStream pfq_stream(const HyperSpec &spec, const Scalar &arg_scale) {
    for (const auto &b : spec.lower) {
        if (is_nonpositive_integer(b)) {
            throw InvalidLowerParameter("lower parameter " + b.to_string() + " is a non-positive integer");
        }
    }
    return CoeffStream([spec, arg_scale](std::size_t n) {
        Scalar num = arg_scale.pow(static_cast<long>(n));
        for (const auto &a : spec.upper) {
            num *= pochhammer(a, n);
        }
        Scalar den(factorial(n));
        for (const auto &b : spec.lower) {
            den *= pochhammer(b, n);
        }
        return num / den;
    });
}

CoeffStream rphis_stream(const QHyperSpec &spec, const Scalar &arg_scale) {
    if (spec.q.is_zero()) {
        throw InvalidLowerParameter("q must be nonzero");
    }
    for (const auto &b : spec.lower) {
        Scalar bqk = b;
        for (std::size_t k = 0; k <= kEagerLowerCheck; ++k) {
            if (bqk.is_one()) {
                throw InvalidLowerParameter("lower parameter " + b.to_string() + " equals q^-" + std::to_string(k));
            }
            bqk *= spec.q;
        }
    }
    const long balance = 1 + static_cast<long>(spec.lower.size()) - static_cast<long>(spec.upper.size());
    return CoeffStream([spec, arg_scale, balance](std::size_t n) {
        const auto triangular = static_cast<long>(n * (n - (n > 0 ? 1 : 0)) / 2);
        const Scalar twist = sign_power(n) * spec.q.pow(triangular);
        Scalar num = twist.pow(balance) * arg_scale.pow(static_cast<long>(n));
        for (const auto &a : spec.upper) {
            num *= q_shifted(a, spec.q, n);
        }
        Scalar den = q_shifted(spec.q, spec.q, n);
        for (const auto &b : spec.lower) {
            den *= q_shifted(b, spec.q, n);
        }
        if (den.is_zero()) {
            throw InvalidLowerParameter("vanishing q-shifted factorial at n = " + std::to_string(n));
        }
        return num / den;
    });
}

CoeffStream q_exponential_stream(const Scalar &q, const Scalar &scale) {
    return rphis_stream(QHyperSpec{{Scalar(0)}, {}, q}, scale);
}

CoeffStream q_product_stream(const Scalar &q, const Scalar &scale) {
    return rphis_stream(QHyperSpec{{}, {}, q}, scale);
}

} // namespace dops
