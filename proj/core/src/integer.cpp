#include "cubiclat/integer.hpp"

#include <cctype>

#include "cubiclat/errors.hpp"

namespace cubiclat {

Int isqrt_floor(const Int& x) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

std::optional<Int> exact_sqrt(const Int& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (mpz_perfect_square_p(x.get_mpz_t()) == 0) return std::nullopt;
  return isqrt_floor(x);
}

Int parse_decimal(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && text[0] == '-') start = 1;
  if (start == text.size()) throw SchemaError("empty integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw SchemaError("not a decimal integer: '" + text + "'");
    }
  }
  return Int(text, 10);
}

std::string to_decimal(const Int& value) { return value.get_str(); }

}  // namespace cubiclat
