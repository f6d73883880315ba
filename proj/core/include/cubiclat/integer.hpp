#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace cubiclat {

// Every matrix entry, determinant and pivot in this library is one of these
// two types; fixed-width integers never hold lattice data.
using Int = mpz_class;
using Rat = mpq_class;

// floor(sqrt(x)), x >= 0
Int isqrt_floor(const Int& x);

// m with m*m == x, if x is a perfect square
std::optional<Int> exact_sqrt(const Int& x);

// Strict base-10 parse: optional leading '-', then digits. Throws
// cubiclat::SchemaError on anything else.
Int parse_decimal(const std::string& text);

std::string to_decimal(const Int& value);

}  // namespace cubiclat
