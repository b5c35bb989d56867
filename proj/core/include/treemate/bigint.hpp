#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace treemate {

using BigInt = boost::multiprecision::cpp_int;

} // namespace treemate
