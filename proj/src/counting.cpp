#include "necklace/counting.hpp"

#include "necklace/errors.hpp"
#include "necklace/ranking.hpp"
#include "walks.hpp"

namespace necklace {

BigInt count_cyclic_avoiding(Alphabet alphabet, std::uint64_t len, const ForbiddenSet& f) {
    if (len == 0) throw invalid_input("length must be positive");
    AhoCorasick ac(alphabet, f);
    return detail::closed_walk_counts(nullptr, ac, {len})[0];
}

namespace {

// C at every divisor length of len, ascending, in one automaton pass.
std::vector<BigInt> cyclic_counts_at_divisors(Alphabet alphabet, std::uint64_t len,
                                              const ForbiddenSet& f) {
    AhoCorasick ac(alphabet, f);
    return detail::closed_walk_counts(nullptr, ac, divisors(len));
}

BigInt necklaces_from_cyclic(const std::vector<std::uint64_t>& divs,
                             const std::vector<BigInt>& cyclic, std::uint64_t len) {
    BigInt sum = 0;
    for (std::size_t i = 0; i < divs.size(); ++i) {
        std::uint64_t d = divs[i];
        if (len % d) continue;
        // phi(len/d) * C_d, summed over divisors d of len.
        sum += BigInt(static_cast<unsigned long>(euler_phi(len / d))) * cyclic[i];
    }
    return exact_div(sum, len);
}

}  // namespace

BigInt count_necklaces(Alphabet alphabet, std::uint64_t len, const ForbiddenSet& f) {
    if (len == 0) throw invalid_input("length must be positive");
    auto divs = divisors(len);
    auto cyclic = cyclic_counts_at_divisors(alphabet, len, f);
    return necklaces_from_cyclic(divs, cyclic, len);
}

BigInt count_lyndon(Alphabet alphabet, std::uint64_t len, const ForbiddenSet& f) {
    if (len == 0) throw invalid_input("length must be positive");
    auto divs = divisors(len);
    auto cyclic = cyclic_counts_at_divisors(alphabet, len, f);
    BigInt sum = 0;
    for (std::uint64_t d : divs) {
        int mu = moebius_mu(d);
        if (mu == 0) continue;
        BigInt n = necklaces_from_cyclic(divs, cyclic, len / d);
        sum += mu == 1 ? n : -n;
    }
    return sum;
}

CountTable count_table(Alphabet alphabet, std::uint64_t max_len, const ForbiddenSet& f,
                       CountKind kind) {
    CountTable table;
    table.kind = kind;
    for (std::uint64_t l = 1; l <= max_len; ++l) {
        switch (kind) {
            case CountKind::CyclicWords: table.per_length[l] = count_cyclic_avoiding(alphabet, l, f); break;
            case CountKind::Necklaces: table.per_length[l] = count_necklaces(alphabet, l, f); break;
            case CountKind::Lyndon: table.per_length[l] = count_lyndon(alphabet, l, f); break;
        }
    }
    return table;
}

BigInt count_necklaces_with_prefix(const Word& prefix, std::uint64_t len, const ForbiddenSet& f) {
    RankContext ctx(prefix.alphabet(), len, f);
    return count_necklaces_with_prefix(ctx, prefix);
}

}  // namespace necklace
