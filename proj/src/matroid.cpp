#include "skelbetti/matroid.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "skelbetti/transfer.hpp"

namespace skelbetti {

struct Matroid::RankCache {
    std::shared_mutex mutex;
    std::unordered_map<Mask, int> ranks;
};

Matroid::Matroid(int n, const std::vector<std::vector<int>>& bases, bool strict) {
    std::vector<Mask> masks;
    masks.reserve(bases.size());
    for (const auto& b : bases) masks.push_back(mask_of(b, n));
    *this = from_masks(n, std::move(masks), strict);
}

Matroid Matroid::from_masks(int n, std::vector<Mask> bases, bool strict) {
    Matroid m = trusted(n, std::move(bases));
    m.validate(strict);
    return m;
}

Matroid Matroid::trusted(int n, std::vector<Mask> bases) {
    if (n < 0 || n > kMaxGroundSet)
        throw InvalidGroundSet("ground set size " + std::to_string(n) +
                               " outside [0, " + std::to_string(kMaxGroundSet) + "]");
    for (Mask b : bases)
        if (!subset_of(b, full_mask(n)))
            throw InvalidGroundSet("basis " + mask_to_string(b) +
                                   " not contained in {1,...," + std::to_string(n) + "}");
    if (bases.empty()) throw NotAMatroid("a matroid has at least one basis");
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    int r = popcount(bases.front());
    for (Mask b : bases)
        if (popcount(b) != r)
            throw NotEquicardinal("bases " + mask_to_string(bases.front()) + " and " +
                                  mask_to_string(b) + " have different cardinalities");
    Matroid m;
    m.n_ = n;
    m.bases_ = std::move(bases);
    m.cache_ = std::make_shared<RankCache>();
    return m;
}

namespace {

bool augments(const std::vector<char>& independent, Mask big, Mask small) {
    for (Mask rest = big & ~small; rest != 0; rest &= rest - 1)
        if (independent[small | (rest & (~rest + 1))]) return true;
    return false;
}

}  // namespace

void Matroid::validate(bool strict) const {
    bool exhaustive = strict || n_ <= 12;
    if (exhaustive) {
        if (n_ > 20)
            throw TooLarge("exhaustive exchange validation is capped at 20 elements");
        std::vector<char> independent(std::size_t{1} << n_, 0);
        for (Mask b : bases_)
            for_each_subset(b, [&](Mask s) { independent[s] = 1; });
        std::vector<Mask> sets;
        for (Mask s = 0; s < (Mask{1} << n_); ++s)
            if (independent[s]) sets.push_back(s);
        for (Mask big : sets)
            for (Mask small : sets) {
                if (popcount(big) <= popcount(small)) continue;
                if (!augments(independent, big, small))
                    throw NotAMatroid("augmentation fails for " + mask_to_string(big) +
                                      " over " + mask_to_string(small));
            }
        return;
    }
    // Sampled check: random independent pairs drawn from subsets of bases.
    std::mt19937_64 rng(0x5ee1cafe);
    std::uniform_int_distribution<std::size_t> pick(0, bases_.size() - 1);
    std::uniform_int_distribution<Mask> bits(0, full_mask(n_));
    for (int trial = 0; trial < 10000; ++trial) {
        Mask big = bases_[pick(rng)] & bits(rng);
        Mask small = bases_[pick(rng)] & bits(rng);
        if (popcount(big) <= popcount(small)) continue;
        bool ok = false;
        for (Mask rest = big & ~small; rest != 0 && !ok; rest &= rest - 1)
            ok = independent(small | (rest & (~rest + 1)));
        if (!ok)
            throw NotAMatroid("augmentation fails for " + mask_to_string(big) +
                              " over " + mask_to_string(small));
    }
}

int Matroid::rank(Mask sigma) const {
    {
        std::shared_lock lock(cache_->mutex);
        auto it = cache_->ranks.find(sigma);
        if (it != cache_->ranks.end()) return it->second;
    }
    int best = 0;
    for (Mask b : bases_) best = std::max(best, popcount(b & sigma));
    std::unique_lock lock(cache_->mutex);
    cache_->ranks.emplace(sigma, best);
    return best;
}

SimplicialComplex Matroid::independence_complex() const {
    return SimplicialComplex::from_masks(n_, bases_);
}

std::vector<Mask> Matroid::circuits() const {
    std::vector<Mask> out;
    for (Mask s = 1; s < (Mask{1} << n_); ++s) {
        if (nullity(s) != 1) continue;
        bool minimal = true;
        for (Mask rest = s; rest != 0 && minimal; rest &= rest - 1)
            minimal = (nullity(s ^ (rest & (~rest + 1))) == 0);
        if (minimal) out.push_back(s);
    }
    return out;
}

Matroid Matroid::dual() const {
    std::vector<Mask> complements;
    complements.reserve(bases_.size());
    for (Mask b : bases_) complements.push_back(full_mask(n_) & ~b);
    return trusted(n_, std::move(complements));
}

Matroid Matroid::truncation(int i) const {
    int r = rank();
    if (i < 0 || i > r)
        throw TruncationRange("truncation index " + std::to_string(i) +
                              " outside [0, " + std::to_string(r) + "]");
    if (i == 0) return *this;
    std::vector<Mask> cut;
    for (Mask b : bases_) append_subsets_of_size(b, r - i, cut);
    return trusted(n_, std::move(cut));  // trusted dedups
}

Matroid Matroid::elongation(int i) const {
    int r = rank();
    if (i < 0 || i > n_ - r)
        throw ElongationRange("elongation index " + std::to_string(i) +
                              " outside [0, " + std::to_string(n_ - r) + "]");
    if (i == 0) return *this;
    std::vector<Mask> spanning;
    std::vector<Mask> candidates;
    append_subsets_of_size(full_mask(n_), r + i, candidates);
    for (Mask s : candidates)
        if (rank(s) == r) spanning.push_back(s);
    return trusted(n_, std::move(spanning));
}

BettiTable matroid_betti(const Matroid& m, int p) {
    require_prime(p);
    const SimplicialComplex complex = m.independence_complex();
    BettiTable t2 = hochster_table(complex, 2);
    BettiTable t3 = hochster_table(complex, 3);
    if (t2.entries != t3.entries)
        throw FieldDependenceBug("independence-complex tables differ between GF(2) and GF(3)");
    BettiTable out = (p == 2) ? t2 : (p == 3) ? t3 : hochster_table(complex, p);
    if (out.entries != t2.entries)
        throw FieldDependenceBug("independence-complex table over GF(" + std::to_string(p) +
                                 ") differs from GF(2)");
    return out;
}

std::set<std::pair<int, Mask>> nullity_support(const Matroid& m) {
    std::set<std::pair<int, Mask>> support;
    for (Mask s = 1; s < (Mask{1} << m.ground_set_size()); ++s) {
        int nul = m.nullity(s);
        if (nul == 0) continue;
        // Minimal within its nullity level: dropping any element loses one.
        bool minimal = true;
        for (Mask rest = s; rest != 0 && minimal; rest &= rest - 1)
            minimal = (m.nullity(s ^ (rest & (~rest + 1))) == nul - 1);
        if (minimal) support.emplace(nul - 1, s);
    }
    return support;
}

std::set<std::pair<int, Mask>> fine_support_ideal(const GradedBetti& fine) {
    std::set<std::pair<int, Mask>> support;
    for (const auto& [key, value] : fine.entries)
        if (key.first >= 1) support.emplace(key.first - 1, key.second);
    return support;
}

BettiTable truncation_betti_closed_form(const BettiTable& ring_table, int n, int k) {
    return transfer(TransferInput{ring_table, n, k - 1});
}

bool elongation_shift_check(const Matroid& m, int l) {
    int r = m.rank(), n = m.ground_set_size();
    if (l < 0 || l >= n - r)
        throw ElongationRange("shift check index " + std::to_string(l) +
                              " outside [0, " + std::to_string(n - r) + ")");
    BettiTable lower = matroid_betti(m.elongation(l), 2).to_convention(Convention::ideal);
    BettiTable upper = matroid_betti(m.elongation(l + 1), 2).to_convention(Convention::ideal);
    for (const auto& [key, value] : lower.entries)
        if (key.first >= 1 && upper.at(key.first - 1, key.second) == 0) return false;
    for (const auto& [key, value] : upper.entries)
        if (lower.at(key.first + 1, key.second) == 0) return false;
    return true;
}

const std::vector<std::vector<int>>& counterexample_bases_m() {
    static const std::vector<std::vector<int>> bases = {
        {1, 3, 4, 6, 7}, {1, 2, 3, 6, 8}, {1, 2, 3, 4, 8}, {1, 2, 3, 5, 8},
        {1, 2, 5, 6, 8}, {1, 2, 3, 4, 7}, {1, 2, 3, 5, 7}, {1, 2, 5, 6, 7},
        {1, 3, 4, 5, 7}, {1, 3, 4, 6, 8}, {1, 2, 4, 6, 8}, {1, 2, 4, 6, 7},
        {1, 3, 4, 5, 8}, {1, 2, 4, 5, 7}, {1, 4, 5, 6, 7}, {1, 2, 3, 6, 7},
        {1, 3, 5, 6, 7}, {1, 4, 5, 6, 8}, {1, 3, 5, 6, 8}, {1, 2, 4, 5, 8}};
    return bases;
}

const std::vector<std::vector<int>>& counterexample_bases_n() {
    static const std::vector<std::vector<int>> bases = {
        {1, 3, 4, 6, 7}, {1, 2, 3, 4, 8}, {1, 2, 3, 5, 8}, {1, 2, 5, 6, 8},
        {1, 2, 3, 4, 7}, {1, 2, 3, 5, 7}, {1, 2, 5, 6, 7}, {1, 3, 4, 5, 7},
        {1, 3, 4, 6, 8}, {1, 2, 4, 6, 8}, {1, 2, 4, 6, 7}, {1, 3, 4, 5, 8},
        {1, 2, 4, 5, 7}, {1, 3, 4, 5, 6}, {1, 2, 4, 5, 6}, {1, 3, 5, 6, 7},
        {1, 2, 3, 5, 6}, {1, 2, 3, 4, 6}, {1, 3, 5, 6, 8}, {1, 2, 4, 5, 8}};
    return bases;
}

std::string CounterexampleReport::to_string() const {
    std::ostringstream os;
    os << (base_tables_equal ? "PASS" : "FAIL")
       << ": the two ideals have entrywise equal Betti tables\n";
    os << (elongation_tables_differ ? "PASS" : "FAIL")
       << ": their first elongations have different Betti tables\n";
    auto list = [](const std::vector<std::int64_t>& v) {
        std::string s = "{";
        for (std::size_t k = 0; k < v.size(); ++k)
            s += (k ? "," : "") + std::to_string(v[k]);
        return s + "}";
    };
    os << (multisets_match ? "PASS" : "FAIL")
       << ": elongation entry multisets " << list(m_values) << " vs " << list(n_values)
       << " (expected {1,5,5} vs {2,3,4})\n";
    return os.str();
}

CounterexampleReport counterexample_report() {
    Matroid m(8, counterexample_bases_m());
    Matroid n(8, counterexample_bases_n());

    CounterexampleReport rep;
    rep.table_m = matroid_betti(m, 2).to_convention(Convention::ideal);
    rep.table_n = matroid_betti(n, 2).to_convention(Convention::ideal);
    rep.elongation_m = matroid_betti(m.elongation(1), 2).to_convention(Convention::ideal);
    rep.elongation_n = matroid_betti(n.elongation(1), 2).to_convention(Convention::ideal);

    rep.base_tables_equal = (rep.table_m.entries == rep.table_n.entries);
    rep.elongation_tables_differ = (rep.elongation_m.entries != rep.elongation_n.entries);
    for (const auto& [key, value] : rep.elongation_m.entries) rep.m_values.push_back(value);
    for (const auto& [key, value] : rep.elongation_n.entries) rep.n_values.push_back(value);
    std::sort(rep.m_values.begin(), rep.m_values.end());
    std::sort(rep.n_values.begin(), rep.n_values.end());
    rep.multisets_match = (rep.m_values == std::vector<std::int64_t>{1, 5, 5} &&
                           rep.n_values == std::vector<std::int64_t>{2, 3, 4});
    return rep;
}

}  // namespace skelbetti
