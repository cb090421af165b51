#ifndef NECKLACE_SRC_WALKS_HPP
#define NECKLACE_SRC_WALKS_HPP

#include <cstdint>
#include <vector>

#include "necklace/forbidden.hpp"
#include "necklace/numbers.hpp"
#include "necklace/word.hpp"

namespace necklace::detail {

// Prefix-matching (KMP) automaton of a boundary word w, with, per state, the
// largest "next boundary character" over the live border chain. Reading a
// cyclic word through this automaton with the admissibility rule
//   c >= max_next[state]
// accepts exactly the words whose every rotation window of |w| characters is
// >= w: a character smaller than some live match's next boundary character
// would make that window's comparison resolve below w.
struct BoundaryAutomaton {
    unsigned q = 2;
    int len = 0;
    std::vector<Letter> letters;   // w, 0-based
    std::vector<int> delta;        // len * q; full match collapses to the border
    std::vector<Letter> max_next;  // per state, max over border chain (incl. root)

    explicit BoundaryAutomaton(const Word& w);
    int next(int state, Letter c) const { return delta[std::size_t(state) * q + (c - 1)]; }
    bool admissible(int state, Letter c) const { return c >= max_next[std::size_t(state)]; }
};

// Number of closed walks (over all start states) of each requested length in
// the product of an optional boundary automaton and the Aho-Corasick DFA,
// where a step with character c requires admissibility on the boundary side
// and a non-accepting target on the pattern side.
//
// Closed walks of length d biject with cyclic words x of length d such that
// x avoids the pattern set cyclically and (when a boundary automaton is
// given) every |w|-character rotation window of x's periodic extension is
// >= w; each such x has exactly one valid start state.
std::vector<BigInt> closed_walk_counts(const BoundaryAutomaton* bound,
                                       const AhoCorasick& ac,
                                       const std::vector<std::uint64_t>& steps);

}  // namespace necklace::detail

#endif
