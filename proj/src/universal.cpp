#include "cactus/universal.hpp"

#include <algorithm>
#include <cassert>
#include <random>

#include "cactus/errors.hpp"
#include "cactus/rng.hpp"

namespace cactus {

namespace {

// Rank of a subset `trace` of `s` among subsets of s (bit compression).
unsigned trace_rank(std::uint32_t s, std::uint32_t trace) {
    unsigned rank = 0, out_bit = 0;
    while (s) {
        std::uint32_t low = s & (~s + 1u);
        if (trace & low) rank |= 1u << out_bit;
        ++out_bit;
        s ^= low;
    }
    return rank;
}

std::vector<std::uint32_t> subsets_up_to(int n, int k) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < (1u << n); ++s)
        if (__builtin_popcount(s) <= k) out.push_back(s);
    return out;
}

// Drop members whose every (S, trace) contribution has another provider.
// Scans large members first so small cheap providers survive.
std::vector<std::uint32_t> greedy_prune(int n, int k,
                                        std::vector<std::uint32_t> family) {
    const auto ss = subsets_up_to(n, k);
    std::vector<std::vector<int>> counts(1u << n);
    for (std::uint32_t s : ss) counts[s].assign(1u << __builtin_popcount(s), 0);
    for (std::uint32_t h : family)
        for (std::uint32_t s : ss) ++counts[s][trace_rank(s, h & s)];

    std::vector<std::uint32_t> order = family;
    std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa > pb : a > b;
    });

    std::vector<char> dropped(1u << n, 0);
    for (std::uint32_t h : order) {
        bool removable = true;
        for (std::uint32_t s : ss)
            if (counts[s][trace_rank(s, h & s)] < 2) {
                removable = false;
                break;
            }
        if (!removable) continue;
        dropped[h] = 1;
        for (std::uint32_t s : ss) --counts[s][trace_rank(s, h & s)];
    }

    std::vector<std::uint32_t> kept;
    for (std::uint32_t h : family)
        if (!dropped[h]) kept.push_back(h);
    return kept;
}

}  // namespace

UniversalSet universal_set(int n, int k) {
    if (n < 1 || n > 20)
        throw TooLargeError("universal_set supports 1 <= n <= 20");
    k = std::min(k, n);
    assert(k >= 1);

    if (n <= 12) {
        std::vector<std::uint32_t> all(1u << n);
        for (std::uint32_t h = 0; h < (1u << n); ++h) all[h] = h;
        return {n, k, greedy_prune(n, k, std::move(all))};
    }

    // Seeded random family, verified exhaustively and grown on failure.
    if (k > 6)
        throw TooLargeError("universal_set for n > 12 supports k <= 6 only");
    std::mt19937_64 rng(derive_seed(0x5e7ULL ^ (std::uint64_t(n) << 8), k));
    std::size_t m = std::size_t(1) << k;
    m = m * (k * 5 + 20);
    for (int attempt = 0; attempt < 12; ++attempt) {
        std::vector<std::uint32_t> family;
        family.reserve(m + 2);
        family.push_back(0);
        family.push_back((1u << n) - 1u);
        for (std::size_t i = 0; i < m; ++i)
            family.push_back(static_cast<std::uint32_t>(rng() & ((1u << n) - 1u)));
        std::sort(family.begin(), family.end());
        family.erase(std::unique(family.begin(), family.end()), family.end());
        UniversalSet u{n, k, std::move(family)};
        if (verify_universal(u)) return u;
        m += m / 2;
    }
    throw BudgetExceededError("random universal family failed verification");
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> find_uncovered(
    const UniversalSet& u) {
    for (std::uint32_t s : subsets_up_to(u.n, u.k)) {
        const int bits = __builtin_popcount(s);
        std::vector<char> seen(1u << bits, 0);
        for (std::uint32_t h : u.family) seen[trace_rank(s, h & s)] = 1;
        for (unsigned r = 0; r < (1u << bits); ++r)
            if (!seen[r]) {
                // expand rank r back into a subset of s
                std::uint32_t trace = 0, rest = s;
                for (unsigned b = 0; rest; ++b) {
                    std::uint32_t low = rest & (~rest + 1u);
                    if (r >> b & 1u) trace |= low;
                    rest ^= low;
                }
                return std::make_pair(s, trace);
            }
    }
    return std::nullopt;
}

bool verify_universal(const UniversalSet& u) { return !find_uncovered(u).has_value(); }

ColoringFamily ColoringFamily::all_colorings(int n) {
    ColoringFamily f;
    f.n_ = n;
    f.all_mode_ = true;
    f.size_ = 1;
    for (int i = 0; i < n; ++i) f.size_ *= 3;
    return f;
}

ColoringFamily ColoringFamily::from_universal(int n, UniversalSet base) {
    ColoringFamily f;
    f.n_ = n;
    f.all_mode_ = false;
    f.size_ = base.family.size() * base.family.size();
    f.base_ = std::move(base);
    return f;
}

Coloring ColoringFamily::coloring(std::size_t index) const {
    assert(index < size_);
    Coloring f;
    f.color.resize(n_);
    if (all_mode_) {
        for (int v = 0; v < n_; ++v) {
            f.color[v] = static_cast<std::uint8_t>(1 + index % 3);
            index /= 3;
        }
        return f;
    }
    const std::uint32_t a = base_.family[index / base_.family.size()];
    const std::uint32_t y = base_.family[index % base_.family.size()];
    for (int v = 0; v < n_; ++v)
        f.color[v] = (a >> v & 1u) ? 1 : (y >> v & 1u) ? 2 : 3;
    return f;
}

ColoringFamily coloring_family(int n, int k) {
    assert(k >= 1);
    const int bound = std::min(6 * k, n);
    if (bound >= n) {
        if (n > 20) throw TooLargeError("coloring family supports n <= 20");
        return ColoringFamily::all_colorings(n);
    }
    return ColoringFamily::from_universal(n, universal_set(n, bound));
}

}  // namespace cactus
