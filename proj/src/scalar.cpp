#include "dops/scalar.hpp"

#include <cctype>

#include "dops/errors.hpp"

namespace dops {

Rational::Rational(const mpz_class &num, const mpz_class &den) {
    if (den == 0) {
        throw DivisionByZero();
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw ParseError("not a rational number: '" + std::string(whole) + "'");
    }
    mpz_class z(std::string(s), 10);
    return negative ? mpz_class(-z) : z;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text), mpz_class(1));
    }
    const auto den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
        throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
    const mpz_class den(std::string(den_text), 10);
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(parse_integer(text.substr(0, slash), text), den);
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw DivisionByZero();
    }
    return Rational(mpq_class(1 / q_));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::pow(long exponent) const {
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational &Rational::operator/=(const Rational &o) {
    if (o.is_zero()) {
        throw DivisionByZero();
    }
    q_ /= o.q_;
    return *this;
}

Scalar &Scalar::operator*=(const Scalar &o) {
    if (v_.is_zero() && o.v_.is_zero()) {
        u_ *= o.u_;
        return *this;
    }
    // (a + bw)(c + dw) = ac - bd + (ad + bc - bd) w
    const Rational bd = v_ * o.v_;
    Rational u = u_ * o.u_ - bd;
    Rational v = u_ * o.v_ + v_ * o.u_ - bd;
    u_ = std::move(u);
    v_ = std::move(v);
    return *this;
}

Rational Scalar::norm() const { return u_ * u_ - u_ * v_ + v_ * v_; }

Scalar Scalar::conj() const { return {u_ - v_, -v_}; }

Scalar Scalar::inverse() const {
    if (is_zero()) {
        throw DivisionByZero();
    }
    if (v_.is_zero()) {
        return {u_.inverse()};
    }
    const Rational n = norm().inverse();
    const Scalar c = conj();
    return {c.u_ * n, c.v_ * n};
}

Scalar Scalar::pow(long exponent) const {
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    if (v_.is_zero()) {
        return {u_.pow(exponent)};
    }
    Scalar result(1);
    Scalar base = *this;
    auto e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if ((e & 1UL) != 0) {
            result *= base;
        }
        e >>= 1U;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

std::string Scalar::to_string() const {
    if (v_.is_zero()) {
        return u_.to_string();
    }
    std::string vw = v_.is_one() ? "w" : (v_ == Rational(-1) ? "-w" : v_.to_string() + "*w");
    if (u_.is_zero()) {
        return vw;
    }
    if (vw.front() != '-') {
        vw.insert(vw.begin(), '+');
    }
    return u_.to_string() + vw;
}

Scalar Scalar::parse(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) == 0 && c != '*') {
            s.push_back(c);
        }
    }
    if (s.empty()) {
        throw ParseError("empty scalar");
    }
    Rational u;
    Rational v;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = pos + 1;
        while (end < s.size() && s[end] != '+' && s[end] != '-') {
            ++end;
        }
        std::string term = s.substr(pos, end - pos);
        pos = end;
        if (!term.empty() && term.back() == 'w') {
            term.pop_back();
            if (term.empty() || term == "+") {
                v += Rational(1);
            } else if (term == "-") {
                v -= Rational(1);
            } else {
                v += Rational::parse(term);
            }
        } else {
            u += Rational::parse(term);
        }
    }
    return {u, v};
}

Scalar mul(const Scalar &x, const Scalar &y) { return x * y; }
Scalar inverse(const Scalar &x) { return x.inverse(); }
Scalar conj(const Scalar &x) { return x.conj(); }

bool rational_sqrt(const Rational &x, Rational &root) {
    if (x.sign() < 0) {
        return false;
    }
    const mpz_class num = x.numerator();
    const mpz_class den = x.denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
        return false;
    }
    mpz_class rn;
    mpz_class rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rational(rn, rd);
    return true;
}

bool sqrt_in_field(const Scalar &x, Scalar &root) {
    if (x.is_zero()) {
        root = Scalar();
        return true;
    }
    // With root = a + bw: a^2 - b^2 = u, 2ab - b^2 = v, a^2 - ab + b^2 = sqrt(N(x)),
    // which forces 3 b^2 = v + 2 (sqrt(N(x)) - u).
    Rational n;
    if (!rational_sqrt(x.norm(), n)) {
        return false;
    }
    const Rational b2 = (x.v() + Rational(2) * (n - x.u())) / Rational(3);
    Rational b;
    if (!rational_sqrt(b2, b)) {
        return false;
    }
    Rational a;
    if (b.is_zero()) {
        if (!rational_sqrt(x.u(), a)) {
            return false;
        }
    } else {
        a = (x.v() + b2) / (Rational(2) * b);
    }
    const Scalar candidate(a, b);
    if (candidate * candidate != x) {
        return false;
    }
    root = candidate;
    return true;
}

} // namespace dops
