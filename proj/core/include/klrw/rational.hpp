#ifndef KLRW_RATIONAL_HPP
#define KLRW_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace klrw {

// Exact rational scalar. Every computation in this library is integer/rational
// arithmetic; there is deliberately no floating point anywhere.
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rat& r) { return r.str(); }

}  // namespace klrw

#endif
