#include "necklace/bounded.hpp"

#include <algorithm>
#include <map>

#include "necklace/errors.hpp"

namespace necklace {

namespace {

bool is_proper_prefix_of_any(const ForbiddenSet& f, const std::vector<Letter>& u) {
    for (const Word& w : f.words()) {
        if (u.size() >= w.size()) continue;
        if (std::equal(u.begin(), u.end(), w.letters().begin())) return true;
    }
    return false;
}

bool is_suffix_of_any(const ForbiddenSet& f, const std::vector<Letter>& u) {
    for (const Word& w : f.words()) {
        if (u.size() > w.size()) continue;
        if (std::equal(u.rbegin(), u.rend(), w.letters().rbegin())) return true;
    }
    return false;
}

bool is_factor_of_any(const ForbiddenSet& f, const std::vector<Letter>& u) {
    for (const Word& w : f.words()) {
        if (u.size() > w.size()) continue;
        const auto& h = w.letters();
        if (std::search(h.begin(), h.end(), u.begin(), u.end()) != h.end()) return true;
    }
    return false;
}

}  // namespace

WordSet normalize_word_set(WordSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

WordSet advance_live_prefixes(const ForbiddenSet& f, const WordSet& prefixes, Letter c) {
    WordSet out;
    for (const Word& p : prefixes) {
        auto ext = p.letters();
        ext.push_back(c);
        if (is_proper_prefix_of_any(f, ext)) out.emplace_back(p.alphabet(), std::move(ext));
    }
    std::vector<Letter> single{c};
    if (is_proper_prefix_of_any(f, single))
        out.emplace_back(f.alphabet(), std::move(single));
    return normalize_word_set(std::move(out));
}

WordSet advance_live_suffixes(const ForbiddenSet& f, const WordSet& suffixes, Letter c,
                              SuffixExtension mode) {
    WordSet out;
    for (const Word& s : suffixes) {
        if (is_suffix_of_any(f, s.letters())) out.push_back(s);
        auto ext = s.letters();
        ext.push_back(c);
        bool keep = mode == SuffixExtension::Factor ? is_factor_of_any(f, ext)
                                                    : is_suffix_of_any(f, ext);
        if (keep) out.emplace_back(s.alphabet(), std::move(ext));
    }
    return normalize_word_set(std::move(out));
}

// ---------------------------------------------------------------------------

struct BoundedCountContext::Impl {
    Word boundary;
    ForbiddenSet forbidden;
    AhoCorasick ac;
    std::vector<std::size_t> pi;  // prefix function of the boundary word

    // memo key: (t, l, j, suffix-set id, position, lambda, ac-state mask).
    std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::size_t, std::uint64_t,
                        int, std::uint64_t>,
             BigInt>
        memo;
    // The suffix set only enters through its kill table; identical tables share an id.
    std::vector<std::vector<char>> kill_tables;

    std::size_t kill_table_id(const std::vector<char>& kill) {
        for (std::size_t i = 0; i < kill_tables.size(); ++i)
            if (kill_tables[i] == kill) return i;
        kill_tables.push_back(kill);
        return kill_tables.size() - 1;
    }

    Impl(Word b, ForbiddenSet f)
        : boundary(std::move(b)), forbidden(std::move(f)), ac(boundary.alphabet(), forbidden) {
        if (ac.state_count() > 63)
            throw resource_limit("forbidden set too large for the guarded counter (" +
                                 std::to_string(ac.state_count()) + " automaton states)");
        const auto& w = boundary.letters();
        pi.assign(w.size() + 1, 0);
        for (std::size_t i = 1; i < w.size(); ++i) {
            std::size_t k = pi[i];
            while (k > 0 && w[i] != w[k]) k = pi[k];
            if (w[i] == w[k]) ++k;
            pi[i + 1] = k;
        }
    }
};

BoundedCountContext::BoundedCountContext(Word boundary, ForbiddenSet forbidden)
    : impl_(std::make_unique<Impl>(std::move(boundary), std::move(forbidden))) {}
BoundedCountContext::~BoundedCountContext() = default;
BoundedCountContext::BoundedCountContext(BoundedCountContext&&) noexcept = default;
const Word& BoundedCountContext::boundary() const { return impl_->boundary; }
const ForbiddenSet& BoundedCountContext::forbidden() const { return impl_->forbidden; }
std::size_t BoundedCountContext::memo_entries() const { return impl_->memo.size(); }
void BoundedCountContext::clear_memo() { impl_->memo.clear(); }

namespace {

class GuardedCounter {
public:
    GuardedCounter(BoundedCountContext::Impl& impl, std::uint64_t l, std::uint64_t t,
                   std::uint64_t j, const WordSet& prefixes, const WordSet& suffixes)
        : impl_(impl),
          w_(impl.boundary.letters()),
          wlen_(w_.size()),
          q_(impl.boundary.q()),
          l_(std::min<std::uint64_t>(l, t)),
          t_(t),
          j_(j),
          l_arg_(l) {
        // Seed automaton states: one walk per live prefix, plus the empty one.
        seed_mask_ = std::uint64_t(1) << 0;
        for (const Word& p : prefixes) {
            int s = impl_.ac.walk(p);
            if (impl_.ac.accepting(s))
                throw invalid_input("live prefix already contains a forbidden word");
            seed_mask_ |= std::uint64_t(1) << s;
        }
        // Which end states survive appending each live suffix (or nothing).
        kill_.assign(std::size_t(impl_.ac.state_count()), 0);
        for (int s = 0; s < impl_.ac.state_count(); ++s) {
            bool dead = impl_.ac.accepting(s);
            for (const Word& suf : suffixes) {
                if (dead) break;
                int cur = s;
                for (Letter c : suf.letters()) {
                    cur = impl_.ac.next(cur, c);
                    if (impl_.ac.accepting(cur)) {
                        dead = true;
                        break;
                    }
                }
            }
            kill_[std::size_t(s)] = dead ? 1 : 0;
        }
        kill_id_ = impl_.kill_table_id(kill_);
    }

    BigInt count() { return walk(0, 0, seed_mask_); }

private:
    // pos: next position to fill (0-based), lambda: longest boundary-prefix
    // match ending at pos, mask: set of automaton states over all seeds.
    BigInt walk(std::uint64_t pos, int lambda, std::uint64_t mask) {
        if (pos == t_) {
            // No suffix of the greater-than zone may still match a boundary
            // prefix, and every seed path must survive each live suffix.
            for (std::size_t lp = std::size_t(lambda); lp > 0; lp = impl_.pi[lp])
                if (zone_anchored(pos, lp)) return 0;
            for (int s = 0; s < impl_.ac.state_count(); ++s)
                if ((mask >> s) & 1 && kill_[std::size_t(s)]) return 0;
            return 1;
        }
        auto key = std::make_tuple(t_, l_arg_, j_, pos, lambda, mask);
        auto it = impl_.memo.find(key);
        if (it != impl_.memo.end()) return it->second;
        BigInt total = 0;
        for (unsigned c = 1; c <= q_; ++c) {
            if (pos < j_ && Letter(c) != w_[std::size_t(pos)]) continue;
            if (!zone_ok(pos, lambda, Letter(c))) continue;
            std::uint64_t mask2 = 0;
            bool dead = false;
            for (int s = 0; s < impl_.ac.state_count() && !dead; ++s) {
                if (!((mask >> s) & 1)) continue;
                int s2 = impl_.ac.next(s, Letter(c));
                if (impl_.ac.accepting(s2)) dead = true;
                mask2 |= std::uint64_t(1) << s2;
            }
            if (dead) continue;
            total += walk(pos + 1, next_lambda(lambda, Letter(c)), mask2);
        }
        impl_.memo.emplace(std::move(key), total);
        auto stored = impl_.memo.find(std::make_tuple(t_, l_arg_, j_, pos, lambda, mask));
        return stored->second;
    }

    // Anchored inside the final-l zone: suffix start (1-based) = pos - len + 1
    // over a word of length t; zone begins at position t - l + 1.
    bool zone_anchored(std::uint64_t pos_end, std::size_t match_len) const {
        // match covers positions [pos_end - match_len, pos_end) (0-based).
        return pos_end - match_len >= t_ - l_;
    }

    bool zone_ok(std::uint64_t pos, int lambda, Letter c) {
        for (std::size_t lp = std::size_t(lambda);; lp = impl_.pi[lp]) {
            if (zone_anchored(pos, lp)) {
                if (Letter(c) < w_[lp]) return false;  // suffix would drop below w
                if (Letter(c) == w_[lp] && lp + 1 == wlen_ && pos + 1 == t_)
                    return false;  // suffix equal to w exactly at the end
            }
            if (lp == 0) break;
        }
        return true;
    }

    int next_lambda(int lambda, Letter c) const {
        std::size_t k = std::size_t(lambda);
        if (k == wlen_) k = impl_.pi[wlen_];
        while (true) {
            if (k < wlen_ && c == w_[k]) {
                ++k;
                if (k == wlen_) k = impl_.pi[wlen_];  // full match wraps to its border
                return int(k);
            }
            if (k == 0) return 0;
            k = impl_.pi[k];
        }
    }

    BoundedCountContext::Impl& impl_;
    const std::vector<Letter>& w_;
    std::size_t wlen_;
    unsigned q_;
    std::uint64_t l_, t_, j_, l_arg_;
    std::uint64_t seed_mask_;
    std::vector<char> kill_;
};

}  // namespace

BigInt count_guarded_words(BoundedCountContext& ctx, std::uint64_t l, std::uint64_t t,
                           std::uint64_t j, const WordSet& live_prefixes,
                           const WordSet& live_suffixes) {
    if (j > t)
        throw invalid_input("forced prefix length " + std::to_string(j) +
                            " exceeds word length " + std::to_string(t));
    GuardedCounter counter(ctx.impl(), l, t, j, live_prefixes, live_suffixes);
    return counter.count();
}

}  // namespace necklace
