#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rmrll {

using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, k); 0 for k < 0 or k > n.
BigInt binom(int n, int k);

/// Partial row sum sum_{i=0..r} C(n, i). Empty sum (r < 0) is 0.
BigInt binom_sum(int n, int r);

/// log2 of a positive big integer as a double; -infinity for zero.
double log2_big(const BigInt& v);

} // namespace rmrll
