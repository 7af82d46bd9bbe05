#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace skelbetti {

// A subset of the ground set {1,...,n}: element v is bit v-1.
using Mask = std::uint32_t;

// Masks are 32-bit; everything downstream of homology caps n harder.
inline constexpr int kMaxGroundSet = 30;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return (Mask{1} << n) - 1; }

inline Mask element_bit(int label) { return Mask{1} << (label - 1); }

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

// Elements of m as 1-based labels, increasing.
std::vector<int> elements(Mask m);

Mask mask_of(const std::vector<int>& labels, int n);

// "{1,3,4}"; "{}" for the empty set.
std::string mask_to_string(Mask m);

// Exact binomial coefficient; 0 when k < 0 or k > n. Supports n <= 62.
std::int64_t binom(int n, int k);

// Calls f(sub) for every subset of m, including m itself and the empty set.
template <typename F>
void for_each_subset(Mask m, F&& f) {
    Mask sub = m;
    while (true) {
        f(sub);
        if (sub == 0) break;
        sub = (sub - 1) & m;
    }
}

// Appends every k-element subset of m to out (no particular order).
void append_subsets_of_size(Mask m, int k, std::vector<Mask>& out);

}  // namespace skelbetti
