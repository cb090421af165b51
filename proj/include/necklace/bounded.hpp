#ifndef NECKLACE_BOUNDED_HPP
#define NECKLACE_BOUNDED_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "necklace/forbidden.hpp"
#include "necklace/numbers.hpp"
#include "necklace/word.hpp"

namespace necklace {

// Small explicit word sets used for the live forbidden-word boundary contexts.
using WordSet = std::vector<Word>;  // kept sorted and unique

WordSet normalize_word_set(WordSet s);

// Live-prefix step: keeps p*c when it is still a proper prefix of a forbidden
// word, and admits c itself when c starts one. Everything else is dropped.
WordSet advance_live_prefixes(const ForbiddenSet& f, const WordSet& prefixes, Letter c);

// Live-suffix step. Two readings of "s*c extends the context" are supported:
// Factor keeps s*c when it is a factor of a forbidden word, Suffix only when
// it is a suffix of one. Members that are suffixes of a forbidden word are
// retained either way.
enum class SuffixExtension { Factor, Suffix };
WordSet advance_live_suffixes(const ForbiddenSet& f, const WordSet& suffixes, Letter c,
                              SuffixExtension mode = SuffixExtension::Factor);

// Workspace for guarded word counts against one boundary word and forbidden
// set; owns the memo table.
class BoundedCountContext {
public:
    BoundedCountContext(Word boundary, ForbiddenSet forbidden);
    ~BoundedCountContext();
    BoundedCountContext(BoundedCountContext&&) noexcept;

    const Word& boundary() const;
    const ForbiddenSet& forbidden() const;
    std::size_t memo_entries() const;
    void clear_memo();

    struct Impl;
    Impl& impl() { return *impl_; }

private:
    std::unique_ptr<Impl> impl_;
};

// Number of words v of length t over the boundary's alphabet such that
//   (i)  no forbidden word occurs in p*v*s for any p in P u {eps}, s in S u {eps};
//   (ii) the first j characters of v equal the boundary's first j characters;
//   (iii) every suffix of the final min(l, t) characters of v is greater than
//         the boundary word (strictly greater at some position within the
//         suffix; a suffix that is a prefix of the boundary is not greater).
// Throws invalid_input when j > t.
BigInt count_guarded_words(BoundedCountContext& ctx, std::uint64_t l, std::uint64_t t,
                           std::uint64_t j, const WordSet& live_prefixes,
                           const WordSet& live_suffixes);

}  // namespace necklace

#endif
