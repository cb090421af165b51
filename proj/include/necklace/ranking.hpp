#ifndef NECKLACE_RANKING_HPP
#define NECKLACE_RANKING_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "necklace/forbidden.hpp"
#include "necklace/numbers.hpp"
#include "necklace/word.hpp"

namespace necklace {

// Ranking workspace for one (alphabet, length, forbidden set) triple. A
// context owns a memo table and must not be shared between threads while a
// computation is running; distinct contexts are independent.
class RankContext {
public:
    RankContext(Alphabet alphabet, std::uint64_t length, ForbiddenSet forbidden = {},
                bool memoize = true);
    ~RankContext();
    RankContext(RankContext&&) noexcept;
    RankContext& operator=(RankContext&&) noexcept;

    const Alphabet& alphabet() const;
    std::uint64_t length() const;
    const ForbiddenSet& forbidden() const;

    // |T_l(w, F)| for each divisor l of the context length, ascending.
    const std::vector<BigInt>& all_T(const Word& w);
    const std::vector<std::uint64_t>& divisor_list() const;

    BigInt total_necklaces();

    void set_memoize(bool on);
    std::size_t memo_entries() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// |T_l(w,F)| = #{x in Sigma^l : <x> < w under the cross-length comparison,
// x avoids F cyclically}; l must divide the context length.
BigInt size_T(RankContext& ctx, const Word& w, std::uint64_t l);

// Aperiodic part of T_l via Moebius inversion over the divisors of l.
BigInt size_T_prime(RankContext& ctx, const Word& w, std::uint64_t l);

// Number of necklaces (resp. Lyndon words) of the context length avoiding F
// whose canonical word is strictly smaller than w. w is an arbitrary boundary
// word of the context length; it need not be canonical nor avoid F.
BigInt rank_necklace(RankContext& ctx, const Word& w);
BigInt rank_lyndon(RankContext& ctx, const Word& w);

// Is w the canonical word of a necklace of the context language?
bool is_valid_necklace(RankContext& ctx, const Word& w);

BigInt count_necklaces_with_prefix(RankContext& ctx, const Word& prefix);

// Inverse of rank_necklace on the language: the unique necklace of rank r,
// built by prefix descent. 0 <= r < total_necklaces().
Necklace unrank_necklace(RankContext& ctx, const BigInt& r);

// #{v in Sigma^len : the minimal cyclic shift t making v.t < w is exactly the
// given t, the longest common prefix of v.t and w is exactly j, and v avoids
// F cyclically} (shift = suffix of length t moved to the front).
BigInt count_minimal_shift_class(RankContext& ctx, const Word& w, std::uint64_t t,
                                 std::uint64_t j);

// --- fixed content -----------------------------------------------------

struct ParikhVector {
    std::vector<std::uint64_t> counts;  // counts[i] = occurrences of letter i+1

    std::uint64_t total() const;
    bool operator==(const ParikhVector&) const = default;
};

ParikhVector parikh(const Word& w);

// Prefix counter for necklaces of fixed content. The default backend
// enumerates the family once (content-pruned search) and answers queries from
// the sorted list; other backends can be plugged in behind this interface.
class FixedContentCounter {
public:
    virtual ~FixedContentCounter() = default;
    virtual BigInt count_with_prefix(const Word& prefix) const = 0;
    virtual BigInt total() const = 0;
    // Index of the first necklace with the given prefix within the sorted family.
    virtual BigInt first_index_with_prefix(const Word& prefix) const = 0;
    virtual Word at(const BigInt& index) const = 0;
    virtual const std::vector<Word>& all() const = 0;
};

std::unique_ptr<FixedContentCounter> make_fixed_content_counter(
    Alphabet alphabet, const ParikhVector& content, std::uint64_t enumeration_cap = 1u << 22);

BigInt count_fixed_content_with_prefix(const Word& prefix, Alphabet alphabet,
                                       const ParikhVector& content);

}  // namespace necklace

#endif
