#include "binx/linear.hpp"

#include <sstream>
#include <stdexcept>

namespace binx {

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t m) {
  const std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

}  // namespace

LinearCoeffs make_linear(std::int64_t modulus, std::int64_t a, std::int64_t b,
                         std::int64_t c) {
  if (modulus < 1) throw std::invalid_argument("modulus must be at least 1");
  if (modulus > kMaxModulus)
    throw std::invalid_argument("modulus too large");
  return LinearCoeffs{modulus, reduce(a, modulus), reduce(b, modulus),
                      reduce(c, modulus)};
}

Groupoid to_table(const LinearCoeffs& coeffs) {
  if (coeffs.modulus > Groupoid::kMaxOrder)
    throw std::invalid_argument("modulus exceeds the maximum table order");
  const std::int64_t m = coeffs.modulus;
  return tabulate(static_cast<int>(m), [&](int x, int y) {
    return static_cast<int>(reduce(coeffs.a * x + coeffs.b * y + coeffs.c, m));
  });
}

LinearCoeffs compose(const LinearCoeffs& inner, const LinearCoeffs& outer) {
  if (inner.modulus != outer.modulus)
    throw std::invalid_argument("compose requires equal moduli");
  const std::int64_t m = inner.modulus;
  // outer(inner(x,y), inner(y,x)) expands to:
  //   d(ax+by+c) + e(ay+bx+c) + f = (da+eb)x + (db+ea)y + (d+e)c + f.
  const std::int64_t a = inner.a, b = inner.b, c = inner.c;
  const std::int64_t d = outer.a, e = outer.b, f = outer.c;
  return LinearCoeffs{m, reduce(d * a + e * b, m), reduce(d * b + e * a, m),
                      reduce((d + e) * c + f, m)};
}

std::string to_string(const LinearCoeffs& coeffs) {
  std::ostringstream out;
  out << "(" << coeffs.a << ", " << coeffs.b << ", " << coeffs.c << ") mod "
      << coeffs.modulus;
  return out.str();
}

}  // namespace binx
