#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace opchain {

// Every count, polynomial coefficient and matrix entry in this library is an
// exact integer; walk counts grow geometrically, so fixed-width types are out.
using bigint = boost::multiprecision::cpp_int;

}  // namespace opchain
