#ifndef NECKLACE_NUMBERS_HPP
#define NECKLACE_NUMBERS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace necklace {

using BigInt = mpz_class;
using BigRat = mpq_class;

std::uint64_t euler_phi(std::uint64_t n);
int moebius_mu(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

BigInt big_pow(std::uint64_t base, std::uint64_t exp);

// Exact division; throws internal_error if b does not divide a.
BigInt exact_div(const BigInt& a, std::uint64_t b);

}  // namespace necklace

#endif
