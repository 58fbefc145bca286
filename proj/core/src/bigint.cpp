#include "rmrll/bigint.hpp"

#include <cmath>
#include <limits>

namespace rmrll {

BigInt binom(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt c = 1;
    for (int i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;  // exact: C(n-k+i, i) is integral
    }
    return c;
}

BigInt binom_sum(int n, int r) {
    if (r < 0 || n < 0) return 0;
    BigInt s = 0;
    BigInt c = 1;  // C(n, 0)
    const int top = std::min(r, n);
    for (int i = 0; i <= top; ++i) {
        s += c;
        c *= n - i;
        c /= i + 1;
    }
    return s;
}

double log2_big(const BigInt& v) {
    if (v == 0) return -std::numeric_limits<double>::infinity();
    const auto bits = boost::multiprecision::msb(v);
    if (bits <= 960) return std::log2(v.convert_to<double>());
    const BigInt top = v >> int(bits - 64);
    return std::log2(top.convert_to<double>()) + double(bits - 64);
}

} // namespace rmrll
