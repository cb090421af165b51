#ifndef NECKLACE_COUNTING_HPP
#define NECKLACE_COUNTING_HPP

#include <cstdint>
#include <map>
#include <string>

#include "necklace/forbidden.hpp"
#include "necklace/numbers.hpp"
#include "necklace/word.hpp"

namespace necklace {

// Number of length-len words x (linear representatives) such that the cyclic
// word x avoids every forbidden word, wrap-around occurrences included.
BigInt count_cyclic_avoiding(Alphabet alphabet, std::uint64_t len, const ForbiddenSet& f);

// Number of necklaces of length len avoiding f cyclically:
// (1/len) * sum over d | len of phi(d) * C(len/d).
BigInt count_necklaces(Alphabet alphabet, std::uint64_t len, const ForbiddenSet& f);

// Number of Lyndon words of length len avoiding f:
// sum over d | len of mu(d) * N(len/d).
BigInt count_lyndon(Alphabet alphabet, std::uint64_t len, const ForbiddenSet& f);

enum class CountKind { CyclicWords, Necklaces, Lyndon };

struct CountTable {
    CountKind kind = CountKind::Necklaces;
    std::map<std::uint64_t, BigInt> per_length;
};

CountTable count_table(Alphabet alphabet, std::uint64_t max_len, const ForbiddenSet& f,
                       CountKind kind);

// Number of necklaces of length len avoiding f whose canonical word starts
// with the given prefix. Computed as a rank difference of the two extreme
// length-len extensions (plus one when the largest extension is itself such
// a necklace).
BigInt count_necklaces_with_prefix(const Word& prefix, std::uint64_t len, const ForbiddenSet& f);

}  // namespace necklace

#endif
