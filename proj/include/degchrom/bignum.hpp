#ifndef DEGCHROM_BIGNUM_HPP
#define DEGCHROM_BIGNUM_HPP

#include <gmpxx.h>

#include <cstdint>

namespace degchrom {

using BigInt = mpz_class;
using BigRat = mpq_class;

// C(n, r), exact; zero outside 0 <= r <= n.
inline BigInt binomial(long n, long r) {
    if (n < 0 || r < 0 || r > n) return BigInt(0);
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

inline BigInt pow_int(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline BigInt big_from_u64(std::uint64_t v) {
    static_assert(sizeof(unsigned long) >= sizeof(std::uint64_t), "LP64 platform expected");
    return BigInt(static_cast<unsigned long>(v));
}

}  // namespace degchrom

#endif
