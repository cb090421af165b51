#include "necklace/ranking.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "necklace/counting.hpp"
#include "necklace/errors.hpp"
#include "walks.hpp"

namespace necklace {

using detail::BoundaryAutomaton;

struct RankContext::Impl {
    Alphabet alphabet;
    std::uint64_t length;
    ForbiddenSet forbidden;
    bool memoize;
    AhoCorasick ac;
    std::vector<std::uint64_t> divs;
    std::optional<std::vector<BigInt>> c_counts;  // C_d per divisor
    std::map<std::vector<Letter>, std::vector<BigInt>> memo;
    std::optional<BigInt> total;

    Impl(Alphabet a, std::uint64_t len, ForbiddenSet f, bool memo_on)
        : alphabet(a),
          length(len),
          forbidden(std::move(f)),
          memoize(memo_on),
          ac(a, forbidden),
          divs(divisors(len)) {
        if (len == 0) throw invalid_input("ranking length must be positive");
    }

    const std::vector<BigInt>& cyclic_counts() {
        if (!c_counts) c_counts = detail::closed_walk_counts(nullptr, ac, divs);
        return *c_counts;
    }

    std::vector<BigInt> compute_T(const Word& w) {
        BoundaryAutomaton bound(w);
        std::vector<BigInt> below = detail::closed_walk_counts(&bound, ac, divs);
        const std::vector<BigInt>& c = cyclic_counts();
        std::vector<BigInt> t(divs.size());
        for (std::size_t i = 0; i < divs.size(); ++i) t[i] = c[i] - below[i];
        return t;
    }
};

RankContext::RankContext(Alphabet alphabet, std::uint64_t length, ForbiddenSet forbidden,
                         bool memoize)
    : impl_(std::make_unique<Impl>(alphabet, length, std::move(forbidden), memoize)) {}

RankContext::~RankContext() = default;
RankContext::RankContext(RankContext&&) noexcept = default;
RankContext& RankContext::operator=(RankContext&&) noexcept = default;

const Alphabet& RankContext::alphabet() const { return impl_->alphabet; }
std::uint64_t RankContext::length() const { return impl_->length; }
const ForbiddenSet& RankContext::forbidden() const { return impl_->forbidden; }
const std::vector<std::uint64_t>& RankContext::divisor_list() const { return impl_->divs; }
void RankContext::set_memoize(bool on) {
    impl_->memoize = on;
    if (!on) impl_->memo.clear();
}
std::size_t RankContext::memo_entries() const { return impl_->memo.size(); }

const std::vector<BigInt>& RankContext::all_T(const Word& w) {
    if (w.size() != impl_->length)
        throw invalid_input("boundary word length " + std::to_string(w.size()) +
                            " differs from context length " + std::to_string(impl_->length));
    if (!(w.alphabet() == impl_->alphabet)) throw invalid_input("boundary word alphabet mismatch");
    static thread_local std::vector<BigInt> scratch;
    if (!impl_->memoize) {
        scratch = impl_->compute_T(w);
        return scratch;
    }
    auto it = impl_->memo.find(w.letters());
    if (it == impl_->memo.end())
        it = impl_->memo.emplace(w.letters(), impl_->compute_T(w)).first;
    return it->second;
}

BigInt RankContext::total_necklaces() {
    if (!impl_->total)
        impl_->total = count_necklaces(impl_->alphabet, impl_->length, impl_->forbidden);
    return *impl_->total;
}

namespace {

std::size_t divisor_index(const std::vector<std::uint64_t>& divs, std::uint64_t l) {
    auto it = std::lower_bound(divs.begin(), divs.end(), l);
    if (it == divs.end() || *it != l)
        throw invalid_input(std::to_string(l) + " does not divide the context length");
    return std::size_t(it - divs.begin());
}

BigInt t_prime_at(RankContext& ctx, const Word& w, std::uint64_t l) {
    const auto& divs = ctx.divisor_list();
    const auto& t = ctx.all_T(w);
    BigInt sum = 0;
    for (std::size_t i = 0; i < divs.size(); ++i) {
        std::uint64_t e = divs[i];
        if (l % e) continue;
        int mu = moebius_mu(l / e);
        if (mu == 1)
            sum += t[i];
        else if (mu == -1)
            sum -= t[i];
    }
    return sum;
}

}  // namespace

BigInt size_T(RankContext& ctx, const Word& w, std::uint64_t l) {
    return ctx.all_T(w)[divisor_index(ctx.divisor_list(), l)];
}

BigInt size_T_prime(RankContext& ctx, const Word& w, std::uint64_t l) {
    divisor_index(ctx.divisor_list(), l);
    return t_prime_at(ctx, w, l);
}

BigInt rank_necklace(RankContext& ctx, const Word& w) {
    BigInt rank = 0;
    for (std::uint64_t d : ctx.divisor_list()) rank += exact_div(t_prime_at(ctx, w, d), d);
    return rank;
}

BigInt rank_lyndon(RankContext& ctx, const Word& w) {
    return exact_div(t_prime_at(ctx, w, ctx.length()), ctx.length());
}

bool is_valid_necklace(RankContext& ctx, const Word& w) {
    return w.size() == ctx.length() && is_canonical(w) &&
           avoids_cyclically(w, ctx.forbidden());
}

namespace {

Word extend(const Alphabet& alphabet, std::vector<Letter> head, Letter next, std::size_t tail_len,
            Letter tail_char) {
    head.push_back(next);
    head.insert(head.end(), tail_len, tail_char);
    return Word(alphabet, std::move(head));
}

}  // namespace

BigInt count_necklaces_with_prefix(RankContext& ctx, const Word& prefix) {
    const std::uint64_t len = ctx.length();
    if (prefix.size() > len)
        throw invalid_input("prefix longer than the language length");
    if (prefix.size() == len) return is_valid_necklace(ctx, prefix) ? 1 : 0;
    const Letter qc = Letter(ctx.alphabet().q);
    std::size_t tail = std::size_t(len) - prefix.size();
    Word lo(ctx.alphabet(), [&] {
        auto v = prefix.letters();
        v.insert(v.end(), tail, Letter(1));
        return v;
    }());
    Word hi(ctx.alphabet(), [&] {
        auto v = prefix.letters();
        v.insert(v.end(), tail, qc);
        return v;
    }());
    return rank_necklace(ctx, hi) - rank_necklace(ctx, lo) +
           (is_valid_necklace(ctx, hi) ? 1 : 0);
}

Necklace unrank_necklace(RankContext& ctx, const BigInt& r) {
    if (r < 0 || r >= ctx.total_necklaces())
        throw invalid_input("rank " + r.get_str() + " outside [0, " +
                            ctx.total_necklaces().get_str() + ")");
    const std::uint64_t len = ctx.length();
    const unsigned q = ctx.alphabet().q;
    std::vector<Letter> prefix;
    BigInt lo = 0;  // rank of prefix + 1^(remaining): 0 for the empty prefix
    for (std::uint64_t pos = 0; pos < len; ++pos) {
        BigInt running = lo;
        bool placed = false;
        for (unsigned c = 1; c <= q && !placed; ++c) {
            if (c == q) {
                // Last candidate: r must land here, no extra rank needed.
                prefix.push_back(Letter(c));
                lo = running;
                placed = true;
                break;
            }
            std::size_t tail = std::size_t(len - pos - 1);
            Word hi_word = extend(ctx.alphabet(), prefix, Letter(c), tail, Letter(q));
            BigInt hi = rank_necklace(ctx, hi_word);
            BigInt bonus = is_valid_necklace(ctx, hi_word) ? 1 : 0;
            BigInt cnt = hi + bonus - running;
            if (r < running + cnt) {
                prefix.push_back(Letter(c));
                lo = running;
                placed = true;
            } else {
                running += cnt;
            }
        }
        if (!placed) throw internal_error("unrank descent failed to place a character");
    }
    Word result(ctx.alphabet(), std::move(prefix));
    if (!is_valid_necklace(ctx, result))
        throw internal_error("unrank produced a non-necklace: " + result.str(Encoding::Integers));
    return Necklace{result, cyclic_period(result)};
}

// ---------------------------------------------------------------------------
// Minimal-shift class sizes (the (t, j) partition of T).
// ---------------------------------------------------------------------------

namespace {

// Counts closed walks of length len in the product of the boundary-word
// matcher and the pattern DFA, with per-position rules: characters of the
// one window required to sit below w are pinned (its first j characters
// equal w's prefix, the next one is smaller than w_{j+1}), matches whose
// window offset belongs to the ">= w" offset set may never break downwards,
// and everything else is unconstrained.
class MinimalShiftCounter {
public:
    MinimalShiftCounter(const Word& w, const AhoCorasick& ac, std::uint64_t t, std::uint64_t j)
        : w_(w.letters()), len_(w.size()), q_(w.q()), ac_(ac), t_(t), j_(j) {
        pi_.assign(len_ + 1, 0);
        for (std::size_t i = 1; i < len_; ++i) {
            std::size_t k = pi_[i];
            while (k > 0 && w_[i] != w_[k]) k = pi_[k];
            if (w_[i] == w_[k]) ++k;
            pi_[i + 1] = k;
        }
        // Forced characters of the <-window (offset len - t mod len).
        forced_.assign(len_, 0);
        sigma_pos_ = len_;  // sentinel
        std::size_t o_star = (len_ - std::size_t(t_)) % len_;
        for (std::uint64_t s = 0; s < j_; ++s)
            forced_[(o_star + std::size_t(s)) % len_] = w_[std::size_t(s)];
        sigma_pos_ = (o_star + std::size_t(j_)) % len_;
        o_star_ = o_star;
    }

    BigInt count() {
        if (t_ >= len_ || j_ >= len_) return 0;
        if (w_[std::size_t(j_)] == 1) return 0;  // no character below w_{j+1}
        const int na = ac_.state_count();
        const int ns = int(len_) * na;
        std::vector<std::vector<BigInt>> cur(std::size_t(ns));
        for (int s = 0; s < ns; ++s) {
            if (ac_.accepting(s % na)) continue;
            cur[std::size_t(s)].assign(std::size_t(ns), 0);
            cur[std::size_t(s)][std::size_t(s)] = 1;
        }
        for (std::size_t pos = 0; pos < len_; ++pos) {
            std::vector<std::vector<BigInt>> nxt(std::size_t(ns));
            for (int s = 0; s < ns; ++s) {
                if (cur[std::size_t(s)].empty()) continue;
                bool any = false;
                for (const BigInt& v : cur[std::size_t(s)])
                    if (v != 0) {
                        any = true;
                        break;
                    }
                if (!any) continue;
                int lambda = s / na, a = s % na;
                for (unsigned c = 1; c <= q_; ++c) {
                    int target = step(pos, lambda, a, Letter(c));
                    if (target < 0) continue;
                    auto& row = nxt[std::size_t(target)];
                    if (row.empty()) row.assign(std::size_t(ns), 0);
                    const auto& src = cur[std::size_t(s)];
                    for (int u = 0; u < ns; ++u) row[std::size_t(u)] += src[std::size_t(u)];
                }
            }
            cur.swap(nxt);
        }
        BigInt total = 0;
        for (int s = 0; s < ns; ++s)
            if (!cur[std::size_t(s)].empty()) total += cur[std::size_t(s)][std::size_t(s)];
        return total;
    }

private:
    bool in_ge_set(std::size_t offset) const {
        if (t_ == 0) return false;
        if (offset == 0) return true;
        return offset >= len_ - std::size_t(t_) + 1;
    }

    // Returns the packed target state or -1 when the transition is forbidden.
    int step(std::size_t pos, int lambda, int a, Letter c) const {
        if (forced_[pos] != 0 && c != forced_[pos]) return -1;
        if (pos == sigma_pos_ && c >= w_[std::size_t(j_)]) return -1;
        // Walk the border chain; every live match gets its verdict here.
        for (std::size_t lp = std::size_t(lambda);; lp = pi_[lp]) {
            std::size_t offset = (pos + len_ - lp) % len_;
            if (c < w_[lp]) {
                if (in_ge_set(offset)) return -1;
            } else if (c == w_[lp] && lp + 1 == len_) {
                // Window equals w exactly; below-window must stay below.
                if (offset == o_star_) return -1;
            }
            if (lp == 0) break;
        }
        int a2 = ac_.next(a, c);
        if (ac_.accepting(a2)) return -1;
        int l2;
        if (c == w_[std::size_t(lambda)]) {
            l2 = lambda + 1;
            if (l2 == int(len_)) l2 = int(pi_[len_]);
        } else {
            std::size_t k = pi_[std::size_t(lambda)];
            while (k > 0 && c != w_[k]) k = pi_[k];
            l2 = int(c == w_[k] ? k + 1 : 0);
        }
        return l2 * ac_.state_count() + a2;
    }

    std::vector<Letter> w_;
    std::size_t len_;
    unsigned q_;
    const AhoCorasick& ac_;
    std::uint64_t t_, j_;
    std::vector<std::size_t> pi_;
    std::vector<Letter> forced_;
    std::size_t sigma_pos_ = 0, o_star_ = 0;
};

}  // namespace

BigInt count_minimal_shift_class(RankContext& ctx, const Word& w, std::uint64_t t,
                                 std::uint64_t j) {
    if (w.size() != ctx.length()) throw invalid_input("boundary word length mismatch");
    if (t >= ctx.length() || j >= ctx.length()) return 0;
    AhoCorasick ac(ctx.alphabet(), ctx.forbidden());
    return MinimalShiftCounter(w, ac, t, j).count();
}

// ---------------------------------------------------------------------------
// Fixed content.
// ---------------------------------------------------------------------------

std::uint64_t ParikhVector::total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

ParikhVector parikh(const Word& w) {
    ParikhVector p;
    p.counts.assign(w.q(), 0);
    for (Letter c : w.letters()) ++p.counts[std::size_t(c) - 1];
    return p;
}

namespace {

BigInt multinomial(const ParikhVector& p) {
    // Product of binomials: divisions stay exact in this order.
    BigInt result = 1;
    std::uint64_t placed = 0;
    for (std::uint64_t c : p.counts) {
        for (std::uint64_t i = 1; i <= c; ++i) {
            ++placed;
            result *= BigInt(static_cast<unsigned long>(placed));
            result /= BigInt(static_cast<unsigned long>(i));
        }
    }
    return result;
}

class EnumerationContentCounter final : public FixedContentCounter {
public:
    EnumerationContentCounter(Alphabet alphabet, ParikhVector content, std::uint64_t cap)
        : alphabet_(alphabet), content_(std::move(content)) {
        if (content_.counts.size() != alphabet_.q)
            throw invalid_input("Parikh vector must have one count per character");
        std::uint64_t len = content_.total();
        if (len == 0) throw invalid_input("Parikh vector sums to zero");
        BigInt words = multinomial(content_);
        if (words > BigInt(static_cast<unsigned long>(cap)))
            throw resource_limit("fixed-content enumeration would visit " + words.get_str() +
                                 " words (cap " + std::to_string(cap) + ")");
        std::vector<std::uint64_t> remaining = content_.counts;
        std::vector<Letter> partial;
        partial.reserve(len);
        dfs(partial, remaining, len);
    }

    BigInt count_with_prefix(const Word& prefix) const override {
        auto [lo, hi] = prefix_range(prefix);
        return BigInt(static_cast<unsigned long>(hi - lo));
    }
    BigInt total() const override { return BigInt(static_cast<unsigned long>(list_.size())); }
    BigInt first_index_with_prefix(const Word& prefix) const override {
        return BigInt(static_cast<unsigned long>(prefix_range(prefix).first));
    }
    Word at(const BigInt& index) const override {
        if (index < 0 || index >= total()) throw invalid_input("fixed-content index out of range");
        return list_[index.get_ui()];
    }
    const std::vector<Word>& all() const override { return list_; }

private:
    std::pair<std::size_t, std::size_t> prefix_range(const Word& prefix) const {
        auto starts_with = [&](const Word& w) {
            if (prefix.size() > w.size()) return false;
            return std::equal(prefix.letters().begin(), prefix.letters().end(),
                              w.letters().begin());
        };
        auto lo = std::partition_point(list_.begin(), list_.end(), [&](const Word& w) {
            return w.letters() < prefix.letters();
        });
        auto hi = lo;
        while (hi != list_.end() && starts_with(*hi)) ++hi;
        return {std::size_t(lo - list_.begin()), std::size_t(hi - list_.begin())};
    }

    void dfs(std::vector<Letter>& partial, std::vector<std::uint64_t>& remaining,
             std::uint64_t len) {
        if (partial.size() == len) {
            Word w(alphabet_, partial);
            if (is_canonical(w)) list_.push_back(std::move(w));
            return;
        }
        for (unsigned c = 1; c <= alphabet_.q; ++c) {
            if (!remaining[c - 1]) continue;
            if (partial.empty()) {
                // Canonical words start with their smallest present character.
                bool smaller_present = false;
                for (unsigned c2 = 1; c2 < c; ++c2) smaller_present |= remaining[c2 - 1] > 0;
                if (smaller_present) continue;
            }
            --remaining[c - 1];
            partial.push_back(Letter(c));
            dfs(partial, remaining, len);
            partial.pop_back();
            ++remaining[c - 1];
        }
    }

    Alphabet alphabet_;
    ParikhVector content_;
    std::vector<Word> list_;
};

}  // namespace

std::unique_ptr<FixedContentCounter> make_fixed_content_counter(Alphabet alphabet,
                                                                const ParikhVector& content,
                                                                std::uint64_t enumeration_cap) {
    return std::make_unique<EnumerationContentCounter>(alphabet, content, enumeration_cap);
}

BigInt count_fixed_content_with_prefix(const Word& prefix, Alphabet alphabet,
                                       const ParikhVector& content) {
    ParikhVector used = parikh(prefix);
    for (std::size_t i = 0; i < used.counts.size(); ++i)
        if (i < content.counts.size() ? used.counts[i] > content.counts[i] : used.counts[i] > 0)
            return 0;
    auto counter = make_fixed_content_counter(alphabet, content);
    return counter->count_with_prefix(prefix);
}

}  // namespace necklace
