#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace labelkit {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

inline std::string to_decimal(const BigInt& value)
{
    return value.str();
}

} // namespace labelkit
