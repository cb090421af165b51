#include "necklace/numbers.hpp"

#include <algorithm>

#include "necklace/errors.hpp"

namespace necklace {

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw invalid_input("euler_phi(0)");
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

int moebius_mu(std::uint64_t n) {
    if (n == 0) throw invalid_input("moebius_mu(0)");
    int factors = 0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++factors;
    }
    if (n > 1) ++factors;
    return factors % 2 ? -1 : 1;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw invalid_input("divisors(0)");
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
    return out;
}

BigInt exact_div(const BigInt& a, std::uint64_t b) {
    BigInt quot, rem;
    mpz_tdiv_qr_ui(quot.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b);
    if (rem != 0)
        throw internal_error("exact division " + a.get_str() + " / " + std::to_string(b) +
                             " left remainder " + rem.get_str());
    return quot;
}

}  // namespace necklace
