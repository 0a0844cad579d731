#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace erco {

// Exact nonnegative counts; values reach r^binom(n,2), far past any native width.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount big_pow(const BigCount& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

inline BigCount pow2(unsigned exp) {
    BigCount x = 1;
    x <<= exp;
    return x;
}

inline BigCount int_pow(unsigned base, unsigned exp) {
    return big_pow(BigCount(base), exp);
}

inline std::string to_decimal(const BigCount& x) { return x.str(); }

}  // namespace erco
