#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cactus/coloring.hpp"

namespace cactus {

// (n,k)-universal set: for every S of size <= k the family's traces on S
// realize the full powerset of S. Members are bitmasks over [n], n <= 20.
struct UniversalSet {
    int n = 0;
    int k = 0;
    std::vector<std::uint32_t> family;
};

// Desk-scale construction ladder: pruned powerset for n <= 12, seeded random
// family with exhaustive verification for n <= 20. Larger universes are out
// of range and rejected.
UniversalSet universal_set(int n, int k);

bool verify_universal(const UniversalSet& u);

// First (S, trace) pair not realized by the family, if any.
std::optional<std::pair<std::uint32_t, std::uint32_t>> find_uncovered(
    const UniversalSet& u);

// Family of 3-colorings of [n] such that some member agrees with any target
// coloring on any S with |S| <= min(6k, n). Members are enumerated lazily:
// either all 3^n colorings (when 6k >= n) or one coloring per ordered pair of
// universal-set members.
class ColoringFamily {
public:
    static ColoringFamily all_colorings(int n);
    static ColoringFamily from_universal(int n, UniversalSet base);

    std::size_t size() const { return size_; }
    int universe() const { return n_; }
    Coloring coloring(std::size_t index) const;

private:
    ColoringFamily() = default;
    int n_ = 0;
    bool all_mode_ = false;
    std::size_t size_ = 0;
    UniversalSet base_;
};

ColoringFamily coloring_family(int n, int k);

}  // namespace cactus
