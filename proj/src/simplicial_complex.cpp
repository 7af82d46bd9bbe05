#include "skelbetti/simplicial_complex.hpp"

#include <algorithm>
#include <set>

namespace skelbetti {

std::int64_t FVector::f(int dim) const {
    int k = dim + 1;
    if (k < 0 || k >= static_cast<int>(counts.size())) return 0;
    return counts[k];
}

std::int64_t FVector::total() const {
    std::int64_t s = 0;
    for (auto c : counts) s += c;
    return s;
}

std::string FVector::to_string() const {
    std::string out = "(";
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(counts[k]);
    }
    out += ')';
    return out;
}

namespace {

// Keep only maximal masks; result sorted ascending.
std::vector<Mask> antichain(std::vector<Mask> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Mask> maximal;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < faces.size(); ++j) {
            if (i != j && subset_of(faces[i], faces[j]) &&
                (faces[i] != faces[j] || j > i)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maximal.push_back(faces[i]);
    }
    return maximal;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n,
                                     const std::vector<std::vector<int>>& facets) {
    std::vector<Mask> masks;
    masks.reserve(facets.size());
    for (const auto& f : facets) masks.push_back(mask_of(f, n));  // validates labels
    *this = from_masks(n, std::move(masks));
}

SimplicialComplex SimplicialComplex::from_masks(int n, std::vector<Mask> facet_masks) {
    if (n < 0 || n > kMaxGroundSet)
        throw InvalidGroundSet("ground set size " + std::to_string(n) +
                               " outside [0, " + std::to_string(kMaxGroundSet) + "]");
    for (Mask m : facet_masks)
        if (!subset_of(m, full_mask(n)))
            throw InvalidGroundSet("facet " + mask_to_string(m) +
                                   " not contained in {1,...," + std::to_string(n) + "}");
    if (facet_masks.empty())
        throw VoidComplexRejected("a complex needs at least the empty face");
    SimplicialComplex c;
    c.n_ = n;
    c.facets_ = antichain(std::move(facet_masks));
    return c;
}

bool SimplicialComplex::contains(Mask face) const {
    for (Mask f : facets_)
        if (subset_of(face, f)) return true;
    return false;
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (Mask f : facets_) d = std::max(d, popcount(f) - 1);
    return d;
}

bool SimplicialComplex::is_pure() const {
    int k = popcount(facets_.front());
    for (Mask f : facets_)
        if (popcount(f) != k) return false;
    return true;
}

SimplicialComplex SimplicialComplex::restriction(Mask subset) const {
    std::vector<Mask> cut;
    cut.reserve(facets_.size());
    for (Mask f : facets_) cut.push_back(f & subset);
    return from_masks(n_, std::move(cut));
}

SimplicialComplex SimplicialComplex::skeleton(int i) const {
    int d = dimension();
    if (i < -1 || i > d)
        throw SkeletonRangeError("skeleton index " + std::to_string(i) +
                                 " outside [-1, " + std::to_string(d) + "]");
    if (i == d) return *this;
    std::vector<Mask> cut;
    for (Mask f : facets_) {
        if (popcount(f) <= i + 1) {
            cut.push_back(f);
        } else {
            append_subsets_of_size(f, i + 1, cut);
        }
    }
    return from_masks(n_, std::move(cut));
}

FVector SimplicialComplex::f_vector() const {
    FVector fv;
    fv.counts.assign(dimension() + 2, 0);
    for (int k = 0; k < static_cast<int>(fv.counts.size()); ++k)
        fv.counts[k] = static_cast<std::int64_t>(faces_of_cardinality(k).size());
    return fv;
}

std::vector<Mask> SimplicialComplex::faces_of_cardinality(int k) const {
    std::set<Mask> seen;
    std::vector<Mask> buf;
    for (Mask f : facets_) {
        if (popcount(f) < k) continue;
        buf.clear();
        append_subsets_of_size(f, k, buf);
        seen.insert(buf.begin(), buf.end());
    }
    return {seen.begin(), seen.end()};
}

std::vector<Mask> SimplicialComplex::all_faces() const {
    std::set<Mask> seen;
    for (Mask f : facets_)
        for_each_subset(f, [&](Mask s) { seen.insert(s); });
    return {seen.begin(), seen.end()};
}

}  // namespace skelbetti
