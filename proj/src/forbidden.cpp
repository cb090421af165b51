#include "necklace/forbidden.hpp"

#include <algorithm>
#include <queue>

#include "necklace/errors.hpp"

namespace necklace {

namespace {

bool is_linear_factor(const Word& needle, const Word& hay) {
    if (needle.size() > hay.size()) return false;
    const auto& n = needle.letters();
    const auto& h = hay.letters();
    return std::search(h.begin(), h.end(), n.begin(), n.end()) != h.end();
}

}  // namespace

ForbiddenSet::ForbiddenSet(Alphabet alphabet, std::vector<Word> words) : alphabet_(alphabet) {
    for (const Word& w : words)
        if (!(w.alphabet() == alphabet))
            throw invalid_input("forbidden word \"" + w.str(Encoding::Integers) +
                                "\" uses a different alphabet");
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    // Drop any entry that contains another entry; the longer one is dead.
    for (const Word& w : words) {
        bool redundant = false;
        for (const Word& other : words) {
            if (other == w) continue;
            if (is_linear_factor(other, w)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) words_.push_back(w);
    }
    for (const Word& w : words_) max_len_ = std::max(max_len_, w.size());
}

bool contains_cyclically(const Word& x, const Word& f) {
    // f occurs in x^inf iff it occurs starting within the first period.
    const std::size_t n = x.size(), m = f.size();
    for (std::size_t s = 0; s < n; ++s) {
        bool match = true;
        for (std::size_t i = 0; i < m && match; ++i) match = x.cyclic_at(s + i) == f[i];
        if (match) return true;
    }
    return false;
}

bool avoids_cyclically(const Word& x, const ForbiddenSet& f) {
    for (const Word& w : f.words())
        if (contains_cyclically(x, w)) return false;
    return true;
}

AhoCorasick::AhoCorasick(Alphabet alphabet, const ForbiddenSet& f)
    : alphabet_(alphabet), q_(alphabet.q) {
    // Trie of the patterns.
    std::vector<std::vector<int>> child(1, std::vector<int>(q_, -1));
    words_.push_back({});
    accepting_.push_back(0);
    for (const Word& w : f.words()) {
        int cur = 0;
        for (Letter c : w.letters()) {
            int& slot = child[std::size_t(cur)][c - 1];
            if (slot == -1) {
                slot = int(child.size());
                child.emplace_back(q_, -1);
                auto word = words_[std::size_t(cur)];
                word.push_back(c);
                words_.push_back(std::move(word));
                accepting_.push_back(0);
            }
            cur = slot;
        }
        accepting_[std::size_t(cur)] = 1;
    }
    // Breadth-first failure links, folding them into a complete DFA.
    const int n = int(child.size());
    fail_.assign(std::size_t(n), 0);
    delta_.assign(std::size_t(n) * q_, 0);
    std::queue<int> bfs;
    for (unsigned c = 0; c < q_; ++c) {
        int v = child[0][c];
        if (v == -1) {
            delta_[c] = 0;
        } else {
            delta_[c] = v;
            fail_[std::size_t(v)] = 0;
            bfs.push(v);
        }
    }
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        if (accepting_[std::size_t(fail_[std::size_t(u)])]) accepting_[std::size_t(u)] = 1;
        for (unsigned c = 0; c < q_; ++c) {
            int v = child[std::size_t(u)][c];
            int via_fail = delta_[std::size_t(fail_[std::size_t(u)]) * q_ + c];
            if (v == -1) {
                delta_[std::size_t(u) * q_ + c] = via_fail;
            } else {
                delta_[std::size_t(u) * q_ + c] = v;
                fail_[std::size_t(v)] = via_fail;
                bfs.push(v);
            }
        }
    }
}

int AhoCorasick::walk(const Word& w) const {
    int s = 0;
    for (Letter c : w.letters()) s = next(s, c);
    return s;
}

}  // namespace necklace
