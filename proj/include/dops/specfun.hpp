#pragma once

#include <cstddef>
#include <vector>

#include "dops/scalar.hpp"
#include "dops/series.hpp"

namespace dops {

/// (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.
Scalar pochhammer(const Scalar &x, std::size_t n);

/// (x;q)_n = (1-x)(1-xq)...(1-xq^{n-1}); (x;q)_0 = 1.
Scalar q_shifted(const Scalar &x, const Scalar &q, std::size_t n);

Rational factorial(std::size_t n);

/// Parameters of pFq(upper; lower; z).
struct HyperSpec {
    std::vector<Scalar> upper;
    std::vector<Scalar> lower;
};

/// Parameters of r phi s(upper; lower; q, z).
struct QHyperSpec {
    std::vector<Scalar> upper;
    std::vector<Scalar> lower;
    Scalar q;
};

/// Coefficients of pFq(upper; lower; scale * t):
///   n -> prod (a_i)_n / prod (b_j)_n * scale^n / n!.
/// Throws InvalidLowerParameter when a lower parameter is 0, -1, -2, ...
CoeffStream pfq_stream(const HyperSpec &spec, const Scalar &arg_scale);

/// Coefficients of r phi s(upper; lower; q, scale * t):
///   n -> prod (a_i;q)_n / prod (b_j;q)_n * ((-1)^n q^{n(n-1)/2})^{1+s-r} * scale^n / (q;q)_n.
/// Throws InvalidLowerParameter when q = 0 or a lower parameter equals q^{-k}.
CoeffStream rphis_stream(const QHyperSpec &spec, const Scalar &arg_scale);

/// e_q(scale * t) = 1/(scale*t; q)_inf = 1phi0(0; -; q, scale * t).
CoeffStream q_exponential_stream(const Scalar &q, const Scalar &scale);

/// (scale * t; q)_inf = 0phi0(-; -; q, scale * t).
CoeffStream q_product_stream(const Scalar &q, const Scalar &scale);

} // namespace dops
