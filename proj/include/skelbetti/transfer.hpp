#pragma once

#include <vector>

#include "skelbetti/betti.hpp"

namespace skelbetti {

// Input of the closed-form skeleton step: the ring-convention Betti table of
// a complex together with its ground-set size n and dimension d.  Everything
// the step needs is recoverable from these three; the complex itself is not
// required.
struct TransferInput {
    BettiTable table;
    int n = 0;
    int d = 0;

    // InconsistentTable unless: ring convention, d >= 1, n >= d+1,
    // β_{0,0} = 1 and no other entry in column 0.
    void validate() const;
};

// The number of top-dimensional faces, recovered from the table alone:
//   f_{Δ,d} = Σ_i (-1)^(n+d+i+1) Σ_{j >= n-d-1} C(j, n-d-1) β_{i,j}.
// A negative result proves the input is not the table of a d-complex and
// raises InconsistentTable.
std::int64_t top_face_count(const TransferInput& in);

// Ring-convention table of the (d-1)-skeleton, in closed form:
//   β'_{i,j}   = β_{i,j}                                   for j <= d+i-1,
//   β'_{i,d+i} = β_{i,d+i} - β_{i-1,d+i} + C(n-d-1, i-1)·δ for 1 <= i <= n-d,
//                (the δ term absent once i > n-d), with δ = top_face_count,
//   β'_{i,j}   = 0 for j >= d+i+1.
// Negative computed entries raise InconsistentTable naming the offending
// position.
BettiTable transfer(const TransferInput& in);

// Iterates transfer: returns the tables of the (d-1)-, ..., (d-steps)-
// skeletons, one per step.  steps = 0 yields an empty list.  Each step feeds
// the previous output back in with d decremented; failures carry the step
// index.  SkeletonRangeError unless 0 <= steps <= d.
std::vector<BettiTable> transfer_chain(const TransferInput& in, int steps);

// pd of the (d-1)-skeleton ring never exceeds pd of the ring plus one;
// both sides computed from scratch.  Requires dim >= 1.
bool pd_bound_check(const SimplicialComplex& complex, int p);

// A Cohen-Macaulay complex hands the property to its (d-1)-skeleton; for a
// non-CM input the check holds vacuously.  Requires dim >= 1.
bool cm_inheritance_check(const SimplicialComplex& complex, int p);

// Recovers dim Δ from a ring-convention table: the Hilbert-series numerator
// Σ_{i,j} (-1)^i β_{i,j} t^j has 1 as a root with multiplicity n - 1 - dim Δ.
int infer_dimension(const BettiTable& ring_table);

}  // namespace skelbetti
