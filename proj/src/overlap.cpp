#include "necklace/overlap.hpp"

#include <algorithm>

#include "necklace/errors.hpp"

namespace necklace {

std::string Distance::str() const {
    if (infinite_) return "inf";
    BigRat r = value_;
    r.canonicalize();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::uint64_t SubwordMultiset::total() const {
    std::uint64_t t = 0;
    for (const auto& [_, c] : counts) t += c;
    return t;
}

std::uint64_t SubwordMultiset::multiplicity(const Word& sub) const {
    std::string key(sub.letters().begin(), sub.letters().end());
    auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
}

SubwordMultiset subword_multiset(const Word& w) {
    const std::size_t n = w.size();
    SubwordMultiset ms;
    ms.base_length = n;
    std::string key;
    for (std::size_t start = 0; start < n; ++start) {
        key.clear();
        for (std::size_t len = 1; len <= n; ++len) {
            key.push_back(char(w.cyclic_at(start + len - 1)));
            ++ms.counts[key];
        }
    }
    return ms;
}

namespace {

// Sorted cyclic windows of one length; intersection by merge.
std::uint64_t intersection_at_length(const Word& a, const Word& b, std::size_t len) {
    auto windows = [len](const Word& w) {
        std::vector<std::string> out;
        out.reserve(w.size());
        for (std::size_t s = 0; s < w.size(); ++s) {
            std::string win(len, '\0');
            for (std::size_t i = 0; i < len; ++i) win[i] = char(w.cyclic_at(s + i));
            out.push_back(std::move(win));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<std::string> wa = windows(a), wb = windows(b);
    std::uint64_t common = 0;
    std::size_t i = 0, j = 0;
    while (i < wa.size() && j < wb.size()) {
        if (wa[i] < wb[j]) ++i;
        else if (wb[j] < wa[i]) ++j;
        else {
            ++common, ++i, ++j;
        }
    }
    return common;
}

}  // namespace

std::uint64_t subword_intersection_size(const Word& a, const Word& b) {
    if (a.size() != b.size())
        throw invalid_input("subword_intersection_size needs equal lengths");
    std::uint64_t total = 0;
    for (std::size_t len = 1; len <= a.size(); ++len)
        total += intersection_at_length(a, b, len);
    return total;
}

Distance overlap_distance(const Word& a, const Word& b, RepresentativeLength rep) {
    std::size_t L = rep == RepresentativeLength::Lcm ? std::lcm(a.size(), b.size())
                                                     : a.size() * b.size();
    Word ra = power_to_length(a, L);
    Word rb = power_to_length(b, L);
    std::uint64_t inter = subword_intersection_size(ra, rb);
    std::uint64_t full = std::uint64_t(L) * L;
    if (inter == 0) return Distance::infinity();
    if (inter == full) return Distance::zero();
    BigRat coeff(BigInt(full));
    coeff /= BigInt(inter);
    coeff.canonicalize();
    return Distance::finite(coeff);
}

Distance overlap_distance(const Necklace& a, const Necklace& b, RepresentativeLength rep) {
    return overlap_distance(a.canonical, b.canonical, rep);
}

std::size_t longest_common_cyclic_factor(const Word& a, const Word& b, std::size_t max_len) {
    std::size_t best = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        auto windows = [len](const Word& w) {
            std::vector<std::string> out;
            for (std::size_t s = 0; s < w.size(); ++s) {
                std::string win(len, '\0');
                for (std::size_t i = 0; i < len; ++i) win[i] = char(w.cyclic_at(s + i));
                out.push_back(std::move(win));
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        };
        std::vector<std::string> wa = windows(a), wb = windows(b), common;
        std::set_intersection(wa.begin(), wa.end(), wb.begin(), wb.end(),
                              std::back_inserter(common));
        if (common.empty()) break;
        best = len;
    }
    return best;
}

}  // namespace necklace
