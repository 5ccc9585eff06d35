#ifndef COXMUT_BIGINT_HPP
#define COXMUT_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace coxmut {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::optional<std::int64_t> to_int64(const BigInt& v)
{
    if (!v.fits_slong_p()) return std::nullopt;
    return static_cast<std::int64_t>(v.get_si());
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) { return v.get_str(); }

inline BigInt factorial(unsigned n)
{
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace coxmut

#endif // COXMUT_BIGINT_HPP
