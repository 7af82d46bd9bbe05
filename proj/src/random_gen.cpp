#include "skelbetti/random_gen.hpp"

#include <numeric>
#include <vector>

namespace skelbetti {

namespace {

Mask random_subset_of_size(std::mt19937_64& rng, int n, int k) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    // Fisher-Yates by hand to keep the stream implementation-independent.
    for (int i = n - 1; i > 0; --i) {
        auto j = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(labels[static_cast<std::size_t>(i)], labels[j]);
    }
    Mask m = 0;
    for (int i = 0; i < k; ++i) m |= element_bit(labels[static_cast<std::size_t>(i)]);
    return m;
}

}  // namespace

SimplicialComplex random_complex(std::mt19937_64& rng, int n, int min_dim) {
    while (true) {
        int count = 1 + static_cast<int>(rng() % 6);
        std::vector<Mask> facets;
        facets.reserve(static_cast<std::size_t>(count));
        for (int t = 0; t < count; ++t) {
            int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            facets.push_back(random_subset_of_size(rng, n, k));
        }
        SimplicialComplex c = SimplicialComplex::from_masks(n, std::move(facets));
        if (c.dimension() >= min_dim) return c;
    }
}

}  // namespace skelbetti
