#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "skelbetti/gf_linalg.hpp"
#include "skelbetti/simplicial_complex.hpp"

namespace skelbetti {

// Homological indexing of a Betti table: `ring` grades the quotient ring
// (β_{0,0} = 1), `ideal` grades the defining ideal, one step lower.
enum class Convention { ring, ideal };

std::string to_string(Convention c);
Convention convention_from_string(const std::string& name);  // ParseError

// Fine-graded Betti numbers β_{i,σ} of the quotient ring, keyed by
// homological index and squarefree degree σ; zero entries omitted.
struct GradedBetti {
    int p = 2;
    int n = 0;
    std::map<std::pair<int, Mask>, std::int64_t> entries;

    std::int64_t at(int i, Mask sigma) const;

    bool operator==(const GradedBetti&) const = default;
};

// Coarse table β_{i,j} = Σ_{|σ|=j} β_{i,σ}; zero entries omitted.
struct BettiTable {
    int p = 2;
    Convention convention = Convention::ring;
    int n = 0;
    std::map<std::pair<int, int>, std::int64_t> entries;

    std::int64_t at(int i, int j) const;
    void add(int i, int j, std::int64_t delta);  // erases entries that reach 0

    // Largest homological index with a nonzero entry; 0 if none beyond the
    // constant strand.
    int projective_dimension() const;
    int max_degree() const;  // largest j present, -1 for an empty table

    // Shift between ring and ideal indexing: β_{i,j}(ring) = β_{i-1,j}(ideal)
    // for i >= 1, with the (0,0) = 1 entry dropped or restored.
    BettiTable to_convention(Convention target) const;

    // Grid with columns i and rows j-i, all-zero rows trimmed, zeros as dots.
    std::string render_text() const;
    std::string render_csv() const;  // header "i,j,beta", one entry per line
    // Canonical JSON: {"p":..,"convention":"..","n":..,"entries":[[i,j,b],..]}
    // with entries sorted by (i,j).
    std::string render_json() const;
    static BettiTable parse_json(const std::string& text);  // ParseError

    bool operator==(const BettiTable&) const = default;
};

// Worker count for the Hochster enumeration, read from the environment
// variable SKELBETTI_THREADS (default 1, clamped to [1,64]).
int thread_count();

// Hochster's formula: β_{i,σ} = dim H~_{|σ|-i-1}(Δ|_σ; GF(p)) for every
// σ ⊆ {1,...,n}; β_{0,∅} = 1 falls out of H~_{-1}({∅}).  Subsets are
// enumerated by increasing cardinality, restrictions with the same facet
// family share one homology computation, and the σ-range is split across
// thread_count() workers with a merge that is bit-identical to the serial
// result.
GradedBetti hochster(const SimplicialComplex& complex, int p);

// Aggregation by |σ| = j, emitted in the requested convention.
BettiTable betti_table(const GradedBetti& fine, Convention convention);

// hochster + betti_table in ring convention.
BettiTable hochster_table(const SimplicialComplex& complex, int p);

struct DepthReport {
    int depth = 0;
    int krull = 0;
    bool cohen_macaulay = false;
};

// depth = n - pd (Auslander–Buchsbaum), krull = dim Δ + 1, CM iff equal.
DepthReport depth_and_cm(const SimplicialComplex& complex, int p);
DepthReport depth_and_cm(const BettiTable& ring_table, int n, int dim);

struct HilbertReport {
    bool holds = false;
    // Coefficients of t^0, t^1, ... for both sides of the identity.
    std::vector<std::int64_t> lhs, rhs;
    std::string mismatch;  // empty when holds

    explicit operator bool() const { return holds; }
};

// Exact polynomial identity
//   Σ_{i=0}^{d+1} f_{i-1} t^i (1-t)^(n-i) = Σ_i (-1)^i Σ_j β_{i,j} t^j
// linking the f-vector with the alternating column sums of the table.
HilbertReport hilbert_identity_check(const SimplicialComplex& complex,
                                     const BettiTable& ring_table);
HilbertReport hilbert_identity_check(const SimplicialComplex& complex, int p);

struct VanishingReport {
    bool holds = true;
    // Entries with j >= d+i+2, which the degree bound forbids.
    std::vector<std::tuple<int, int, std::int64_t>> violations;
    // Entries sitting exactly at j = d+i+1, the largest legal degree.
    std::vector<std::tuple<int, int, std::int64_t>> at_bound;

    explicit operator bool() const { return holds; }
    std::string summary() const;
};

// Degree bound for a complex of dimension d: β_{i,j} = 0 once j >= d+i+2.
// Violations mark the input as not the table of any d-dimensional complex.
VanishingReport vanishing_check(const BettiTable& ring_table, int d);

}  // namespace skelbetti
