#ifndef NECKLACE_WORD_HPP
#define NECKLACE_WORD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace necklace {

// Characters are indexed 1..q; 1 is the smallest character.
using Letter = std::uint8_t;

struct Alphabet {
    unsigned q = 2;

    explicit Alphabet(unsigned size = 2);
    bool operator==(const Alphabet&) const = default;
};

// How words are rendered as text. Letters covers q <= 26 ('a'..'z');
// Integers is a comma-separated list of 1-based indices and covers any q.
enum class Encoding { Letters, Integers };

// A non-empty sequence of letters over a fixed alphabet.
class Word {
public:
    Word() = default;
    Word(Alphabet alphabet, std::vector<Letter> letters);

    const Alphabet& alphabet() const { return alphabet_; }
    unsigned q() const { return alphabet_.q; }
    std::size_t size() const { return letters_.size(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    // Letter at position i of the periodic extension w^inf (i may exceed size).
    Letter cyclic_at(std::size_t i) const { return letters_[i % letters_.size()]; }

    std::string str(Encoding enc = Encoding::Letters) const;

    auto operator<=>(const Word& other) const { return letters_ <=> other.letters_; }
    bool operator==(const Word& other) const { return letters_ == other.letters_; }

private:
    Alphabet alphabet_{2};
    std::vector<Letter> letters_;
};

Word parse_word(const std::string& text, Alphabet alphabet,
                Encoding enc = Encoding::Letters);

// The cyclic shift by i moves the suffix of length i to the front.
// Requires 0 <= i <= |w|.
Word cyclic_shift(const Word& w, std::size_t i);

// Rotation starting at offset i, i.e. w_{i+1}..w_n w_1..w_i.
Word rotation_at(const Word& w, std::size_t i);

// A cyclic equivalence class, stored via its lexicographically least rotation.
struct Necklace {
    Word canonical;
    std::size_t period = 0;  // smallest d with w equal to its shift by d; Lyndon iff == size

    bool is_lyndon() const { return period == canonical.size(); }
    auto operator<=>(const Necklace& other) const { return canonical <=> other.canonical; }
    bool operator==(const Necklace& other) const { return canonical == other.canonical; }
};

Necklace canonical_rotation(const Word& w);

// Index of the lexicographically least rotation (Booth's algorithm, O(n)).
std::size_t least_rotation_index(const Word& w);

// Smallest period d (d divides |w|) of w read cyclically.
std::size_t cyclic_period(const Word& w);

bool is_canonical(const Word& w);

// Powers both words up to length lcm(|a|,|b|).
std::pair<Word, Word> same_length_representatives(const Word& a, const Word& b);

// a repeated to length n (n must be a multiple of |a|).
Word power_to_length(const Word& a, std::size_t n);

Word word_of_uniform(Alphabet alphabet, std::size_t n, Letter c);

}  // namespace necklace

#endif
