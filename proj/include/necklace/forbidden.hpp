#ifndef NECKLACE_FORBIDDEN_HPP
#define NECKLACE_FORBIDDEN_HPP

#include <optional>
#include <vector>

#include "necklace/word.hpp"

namespace necklace {

// A reduced set of forbidden words: no member is a (linear) factor of another,
// all over one alphabet. An empty set is allowed and means "no constraint".
class ForbiddenSet {
public:
    ForbiddenSet() = default;
    ForbiddenSet(Alphabet alphabet, std::vector<Word> words);

    const std::vector<Word>& words() const { return words_; }
    bool empty() const { return words_.empty(); }
    std::size_t max_len() const { return max_len_; }
    const Alphabet& alphabet() const { return alphabet_; }

    bool operator==(const ForbiddenSet&) const = default;

private:
    Alphabet alphabet_{2};
    std::vector<Word> words_;  // normalized: sorted, factor-redundant entries dropped
    std::size_t max_len_ = 0;
};

// Does f occur as a factor of x^inf (equivalently, of some rotation window of
// the cyclic word x, wrapping as often as needed)?
bool contains_cyclically(const Word& x, const Word& f);
bool avoids_cyclically(const Word& x, const ForbiddenSet& f);

// Aho–Corasick pattern automaton compiled to a DFA. State 0 is the root;
// states whose suffix chain hits a full pattern are accepting.
class AhoCorasick {
public:
    AhoCorasick(Alphabet alphabet, const ForbiddenSet& f);

    unsigned q() const { return alphabet_.q; }
    int state_count() const { return int(accepting_.size()); }
    int next(int state, Letter c) const { return delta_[std::size_t(state) * q_ + (c - 1)]; }
    bool accepting(int state) const { return accepting_[std::size_t(state)]; }
    // Longest-proper-suffix link (root for the root itself).
    int suffix_link(int state) const { return fail_[std::size_t(state)]; }
    // The word spelled by the root-to-state path.
    const std::vector<Letter>& state_word(int state) const { return words_[std::size_t(state)]; }

    // State reached reading w from the root, ignoring accept (for diagnostics).
    int walk(const Word& w) const;

private:
    Alphabet alphabet_;
    unsigned q_;
    std::vector<int> delta_;
    std::vector<int> fail_;
    std::vector<char> accepting_;
    std::vector<std::vector<Letter>> words_;
};

}  // namespace necklace

#endif
