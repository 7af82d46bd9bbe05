#pragma once

#include <string>
#include <vector>

#include "skelbetti/errors.hpp"
#include "skelbetti/subset.hpp"

namespace skelbetti {

// Face counts by dimension, starting with the empty face:
// counts[k] is the number of faces with k elements, so counts[0] = 1 always.
struct FVector {
    std::vector<std::int64_t> counts;

    // f_i, the number of i-dimensional faces; 0 outside [-1, max_dim()].
    std::int64_t f(int dim) const;
    int max_dim() const { return static_cast<int>(counts.size()) - 2; }
    std::int64_t total() const;
    std::string to_string() const;  // "(1,6,15,10)"

    bool operator==(const FVector&) const = default;
};

// A finite simplicial complex on the ground set {1,...,n}, stored by its
// facets. The face family is the downward closure of the facets, and
// membership is answered by subset-of-facet tests; the full face list is
// never materialized unless asked for.
//
// The complex {∅} is representable (a single empty facet). The void
// complex with no faces at all is rejected at construction.
class SimplicialComplex {
public:
    // Facets given as sets of 1-based labels. Dominated facets are dropped.
    SimplicialComplex(int n, const std::vector<std::vector<int>>& facets);

    static SimplicialComplex from_masks(int n, std::vector<Mask> facet_masks);

    int ground_set_size() const { return n_; }

    // Antichain, sorted by increasing mask value.
    const std::vector<Mask>& facets() const { return facets_; }

    bool contains(Mask face) const;

    // Max facet cardinality minus one; -1 for {∅}.
    int dimension() const;

    // True iff all facets share one cardinality.
    bool is_pure() const;

    // Δ|_X = {σ ⊆ X : σ ∈ Δ}. The result keeps the ambient ground set and
    // the original labels; elements outside X simply occur in no face.
    SimplicialComplex restriction(Mask subset) const;

    // Faces of dimension <= i, for -1 <= i <= dimension().
    SimplicialComplex skeleton(int i) const;

    FVector f_vector() const;

    // Faces with exactly k elements, sorted by increasing mask value.
    std::vector<Mask> faces_of_cardinality(int k) const;

    // Every face, sorted by increasing mask value. Intended for desk-scale
    // ground sets; the face count is exponential in the facet sizes.
    std::vector<Mask> all_faces() const;

    // Same ground set and same facet family.
    bool operator==(const SimplicialComplex&) const = default;

private:
    SimplicialComplex() = default;

    int n_ = 0;
    std::vector<Mask> facets_;
};

}  // namespace skelbetti
