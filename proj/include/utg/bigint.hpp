#ifndef UTG_BIGINT_HPP_
#define UTG_BIGINT_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace utg {

  using BigInt = boost::multiprecision::cpp_int;

  inline std::string to_string(BigInt const& x) {
    return x.str();
  }

  BigInt factorial(unsigned n);
  BigInt binomial(unsigned n, unsigned k);
  BigInt power(BigInt base, unsigned exponent);

}  // namespace utg

#endif  // UTG_BIGINT_HPP_
