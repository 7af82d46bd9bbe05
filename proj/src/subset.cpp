#include "skelbetti/subset.hpp"

#include <array>
#include <cassert>
#include <sstream>

#include "skelbetti/errors.hpp"

namespace skelbetti {

std::vector<int> elements(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(m)));
    while (m != 0) {
        int bit = std::countr_zero(m);
        out.push_back(bit + 1);
        m &= m - 1;
    }
    return out;
}

Mask mask_of(const std::vector<int>& labels, int n) {
    Mask m = 0;
    for (int v : labels) {
        if (v < 1 || v > n)
            throw InvalidGroundSet("element " + std::to_string(v) +
                                   " outside {1,...," + std::to_string(n) + "}");
        m |= element_bit(v);
    }
    return m;
}

std::string mask_to_string(Mask m) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : elements(m)) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

namespace {

constexpr int kBinomMax = 63;

const std::int64_t* binom_row(int n) {
    // Pascal's triangle, built once.
    static const auto table = [] {
        auto t = std::array<std::array<std::int64_t, kBinomMax>, kBinomMax>{};
        for (int i = 0; i < kBinomMax; ++i) {
            t[i][0] = 1;
            for (int k = 1; k <= i; ++k)
                t[i][k] = t[i - 1][k - 1] + (k <= i - 1 ? t[i - 1][k] : 0);
        }
        return t;
    }();
    return table[n].data();
}

}  // namespace

std::int64_t binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    assert(n < kBinomMax);
    return binom_row(n)[k];
}

void append_subsets_of_size(Mask m, int k, std::vector<Mask>& out) {
    int sz = popcount(m);
    if (k < 0 || k > sz) return;
    if (k == 0) {
        out.push_back(0);
        return;
    }
    std::vector<int> elems = elements(m);
    // Odometer over element indices.
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Mask sub = 0;
        for (int i : idx) sub |= element_bit(elems[static_cast<std::size_t>(i)]);
        out.push_back(sub);
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == sz - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
}

}  // namespace skelbetti
