#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace msect {

using BigInt = mpz_class;

inline bool fits_i64(const BigInt& n) { return n.fits_slong_p(); }

inline std::int64_t to_i64(const BigInt& n) { return n.get_si(); }

inline BigInt pow_ui(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// floor(n^(1/k)) for n >= 0, k >= 1
inline BigInt iroot(const BigInt& n, unsigned long k) {
    BigInt r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline bool is_perfect_square(const BigInt& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline BigInt isqrt(const BigInt& n) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

}  // namespace msect
