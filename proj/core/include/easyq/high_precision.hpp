#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace easyq {

using HighPrecision = boost::multiprecision::cpp_bin_float_100;

}  // namespace easyq
