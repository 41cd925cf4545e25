#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dops {

/// Exact rational number in canonical form (positive denominator, coprime parts).
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {} // NOLINT(google-explicit-constructor)
    Rational(int value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class &num, const mpz_class &den);
    Rational(long num, long den);
    explicit Rational(mpq_class value);

    /// Parses "p" or "p/q" (optional sign, decimal digits only).
    static Rational parse(std::string_view text);

    [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }
    [[nodiscard]] const mpq_class &raw() const { return q_; }

    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] bool is_one() const { return q_ == 1; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(q_); }

    [[nodiscard]] Rational inverse() const;
    [[nodiscard]] Rational abs() const;
    [[nodiscard]] Rational pow(long exponent) const;

    /// "p/q", with "/q" omitted when q = 1.
    [[nodiscard]] std::string to_string() const;

    Rational &operator+=(const Rational &o) {
        q_ += o.q_;
        return *this;
    }
    Rational &operator-=(const Rational &o) {
        q_ -= o.q_;
        return *this;
    }
    Rational &operator*=(const Rational &o) {
        q_ *= o.q_;
        return *this;
    }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

/// Element u + v*w of Q(w), w a primitive cube root of unity (w^2 = -1 - w).
///
/// The paper's j = e^{2i pi/3} is w; its conjugate is w^2 = -1 - w.
class Scalar {
public:
    Scalar() = default;
    Scalar(Rational u) : u_(std::move(u)) {} // NOLINT(google-explicit-constructor)
    Scalar(long u) : u_(u) {}                // NOLINT(google-explicit-constructor)
    Scalar(int u) : u_(u) {}                 // NOLINT(google-explicit-constructor)
    Scalar(Rational u, Rational v) : u_(std::move(u)), v_(std::move(v)) {}

    static Scalar omega() { return {Rational(0), Rational(1)}; }
    static Scalar omega_bar() { return {Rational(-1), Rational(-1)}; }

    /// Accepts rationals ("3/4") and sums of terms with a trailing `w`, e.g. "1-2/3w", "w".
    static Scalar parse(std::string_view text);

    [[nodiscard]] const Rational &u() const { return u_; }
    [[nodiscard]] const Rational &v() const { return v_; }

    [[nodiscard]] bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
    [[nodiscard]] bool is_one() const { return u_.is_one() && v_.is_zero(); }
    [[nodiscard]] bool is_rational() const { return v_.is_zero(); }

    /// Field norm u^2 - uv + v^2 (= |x|^2 under the complex embedding).
    [[nodiscard]] Rational norm() const;
    /// The nontrivial automorphism w -> w^2.
    [[nodiscard]] Scalar conj() const;
    [[nodiscard]] Scalar inverse() const;
    [[nodiscard]] Scalar pow(long exponent) const;

    /// Human-readable form: "p/q", "p/q*w" or "p/q+r/s*w".
    [[nodiscard]] std::string to_string() const;

    Scalar &operator+=(const Scalar &o) {
        u_ += o.u_;
        v_ += o.v_;
        return *this;
    }
    Scalar &operator-=(const Scalar &o) {
        u_ -= o.u_;
        v_ -= o.v_;
        return *this;
    }
    Scalar &operator*=(const Scalar &o);
    Scalar &operator/=(const Scalar &o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
    friend Scalar operator-(const Scalar &a) { return {-a.u_, -a.v_}; }

    friend bool operator==(const Scalar &a, const Scalar &b) = default;

private:
    Rational u_;
    Rational v_;
};

Scalar mul(const Scalar &x, const Scalar &y);
Scalar inverse(const Scalar &x);
Scalar conj(const Scalar &x);

/// Square root inside Q(w) if one exists (either root; the other is its negation).
bool sqrt_in_field(const Scalar &x, Scalar &root);

/// Rational square root if x is the square of a rational.
bool rational_sqrt(const Rational &x, Rational &root);

} // namespace dops
