#ifndef NECKLACE_OVERLAP_HPP
#define NECKLACE_OVERLAP_HPP

#include <cstdint>
#include <map>
#include <string>

#include "necklace/numbers.hpp"
#include "necklace/word.hpp"

namespace necklace {

// Exact overlap distance: 0 iff equal necklaces, infinity iff no shared
// subword, otherwise a rational >= 1.
class Distance {
public:
    static Distance infinity() { return Distance(true, 0); }
    static Distance finite(BigRat v) { return Distance(false, std::move(v)); }
    static Distance zero() { return Distance(false, 0); }

    bool is_infinite() const { return infinite_; }
    const BigRat& value() const { return value_; }

    bool operator==(const Distance& o) const {
        return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
    }
    bool operator<(const Distance& o) const {
        if (infinite_) return false;
        if (o.infinite_) return true;
        return value_ < o.value_;
    }
    bool operator<=(const Distance& o) const { return *this == o || *this < o; }

    std::string str() const;  // "inf" or reduced "num/den"

private:
    Distance(bool inf, BigRat v) : infinite_(inf), value_(std::move(v)) {}
    bool infinite_;
    BigRat value_;
};

// Multiset of every cyclic subword of w, one per (length, start) pair for
// lengths 1..|w|; total multiplicity |w|^2.
struct SubwordMultiset {
    std::map<std::string, std::uint64_t> counts;  // keyed on raw letter bytes
    std::size_t base_length = 0;

    std::uint64_t total() const;
    std::uint64_t multiplicity(const Word& sub) const;
};

SubwordMultiset subword_multiset(const Word& w);

// Size of the multiset intersection of all cyclic subwords of two words of
// EQUAL length (sum over subwords of the minimum multiplicity).
std::uint64_t subword_intersection_size(const Word& a, const Word& b);

// Common length used before comparing two cyclic words. The paper's Fig. 1
// uses the lcm; the product of the lengths is kept as an experimental option.
enum class RepresentativeLength { Lcm, Product };

Distance overlap_distance(const Necklace& a, const Necklace& b,
                          RepresentativeLength rep = RepresentativeLength::Lcm);
Distance overlap_distance(const Word& a, const Word& b,
                          RepresentativeLength rep = RepresentativeLength::Lcm);

// Largest l (up to max_len, default min of the two sizes... capped at the
// larger length) such that a^inf and b^inf share a length-l factor; 0 if the
// words share no letter.
std::size_t longest_common_cyclic_factor(const Word& a, const Word& b, std::size_t max_len);

}  // namespace necklace

#endif
