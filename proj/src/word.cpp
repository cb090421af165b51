#include "necklace/word.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "necklace/errors.hpp"

namespace necklace {

Alphabet::Alphabet(unsigned size) : q(size) {
    if (q < 2) throw invalid_input("alphabet size must be at least 2, got " + std::to_string(q));
    if (q > 255) throw invalid_input("alphabet size must be at most 255, got " + std::to_string(q));
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
    if (letters_.empty()) throw invalid_input("words must be non-empty");
    for (Letter c : letters_) {
        if (c < 1 || c > alphabet_.q)
            throw invalid_input("letter index " + std::to_string(int(c)) +
                                " outside alphabet 1.." + std::to_string(alphabet_.q));
    }
}

std::string Word::str(Encoding enc) const {
    if (enc == Encoding::Letters) {
        if (q() > 26) throw invalid_input("letter encoding only covers q <= 26");
        std::string out;
        out.reserve(size());
        for (Letter c : letters_) out.push_back(char('a' + c - 1));
        return out;
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) out << ',';
        out << int(letters_[i]);
    }
    return out.str();
}

Word parse_word(const std::string& text, Alphabet alphabet, Encoding enc) {
    std::vector<Letter> letters;
    if (enc == Encoding::Letters) {
        for (char ch : text) {
            if (ch < 'a' || ch > 'z')
                throw invalid_input(std::string("character '") + ch + "' in \"" + text +
                                    "\" is not a lowercase letter");
            unsigned idx = unsigned(ch - 'a') + 1;
            if (idx > alphabet.q)
                throw invalid_input(std::string("character '") + ch + "' exceeds alphabet size " +
                                    std::to_string(alphabet.q));
            letters.push_back(Letter(idx));
        }
    } else {
        std::stringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            int v;
            try {
                v = std::stoi(tok);
            } catch (const std::exception&) {
                throw invalid_input("bad integer letter \"" + tok + "\" in \"" + text + "\"");
            }
            if (v < 1 || unsigned(v) > alphabet.q)
                throw invalid_input("letter index " + tok + " outside alphabet 1.." +
                                    std::to_string(alphabet.q));
            letters.push_back(Letter(v));
        }
    }
    if (letters.empty()) throw invalid_input("empty word \"" + text + "\"");
    return Word(alphabet, std::move(letters));
}

Word cyclic_shift(const Word& w, std::size_t i) {
    if (i > w.size())
        throw invalid_input("shift " + std::to_string(i) + " exceeds word length " +
                            std::to_string(w.size()));
    if (i == 0 || i == w.size()) return w;
    std::vector<Letter> out;
    out.reserve(w.size());
    for (std::size_t p = w.size() - i; p < w.size(); ++p) out.push_back(w[p]);
    for (std::size_t p = 0; p < w.size() - i; ++p) out.push_back(w[p]);
    return Word(w.alphabet(), std::move(out));
}

Word rotation_at(const Word& w, std::size_t i) {
    i %= w.size();
    return cyclic_shift(w, (w.size() - i) % w.size());
}

std::size_t least_rotation_index(const Word& w) {
    // Booth's least-rotation algorithm on the doubled word.
    const std::size_t n = w.size();
    std::vector<int> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        Letter sj = w.cyclic_at(j);
        int i = f[j - k - 1];
        while (i != -1 && sj != w.cyclic_at(k + i + 1)) {
            if (sj < w.cyclic_at(k + i + 1)) k = j - i - 1;
            i = f[i];
        }
        if (sj != w.cyclic_at(k + i + 1)) {
            if (sj < w.cyclic_at(k)) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % n;
}

std::size_t cyclic_period(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
        if (ok) return d;
    }
    return n;
}

Necklace canonical_rotation(const Word& w) {
    Word canon = rotation_at(w, least_rotation_index(w));
    std::size_t p = cyclic_period(canon);
    return Necklace{std::move(canon), p};
}

bool is_canonical(const Word& w) { return least_rotation_index(w) == 0; }

Word power_to_length(const Word& a, std::size_t n) {
    if (n % a.size())
        throw internal_error("power_to_length: " + std::to_string(n) +
                             " is not a multiple of " + std::to_string(a.size()));
    std::vector<Letter> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(a.cyclic_at(i));
    return Word(a.alphabet(), std::move(out));
}

std::pair<Word, Word> same_length_representatives(const Word& a, const Word& b) {
    std::size_t L = std::lcm(a.size(), b.size());
    return {power_to_length(a, L), power_to_length(b, L)};
}

Word word_of_uniform(Alphabet alphabet, std::size_t n, Letter c) {
    return Word(alphabet, std::vector<Letter>(n, c));
}

}  // namespace necklace
