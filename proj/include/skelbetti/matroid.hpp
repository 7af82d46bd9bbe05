#pragma once

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "skelbetti/betti.hpp"
#include "skelbetti/simplicial_complex.hpp"

namespace skelbetti {

// A matroid on {1,...,n}, stored by its bases.  Construction validates the
// independence-augmentation axiom: exhaustively over the downward closure
// for n <= 12 or when strict is set, by 10^4 seeded random trials otherwise.
class Matroid {
public:
    Matroid(int n, const std::vector<std::vector<int>>& bases, bool strict = false);

    static Matroid from_masks(int n, std::vector<Mask> bases, bool strict = false);

    int ground_set_size() const { return n_; }

    // Common cardinality of the bases.
    int rank() const { return popcount(bases_.front()); }

    // Sorted by increasing mask value.
    const std::vector<Mask>& bases() const { return bases_; }

    // r(σ) = max |B ∩ σ| over the bases; results cached (shared reads,
    // synchronized writes, values deterministic).
    int rank(Mask sigma) const;
    int nullity(Mask sigma) const { return popcount(sigma) - rank(sigma); }
    bool independent(Mask sigma) const { return rank(sigma) == popcount(sigma); }

    // Facets are the bases; a pure complex of dimension rank-1.
    SimplicialComplex independence_complex() const;

    // Minimal dependent sets, sorted by increasing mask value.
    std::vector<Mask> circuits() const;

    // Bases are the complements of this matroid's bases.
    Matroid dual() const;

    // Rank drops to rank-i; bases are the independent sets of that size.
    // Permits i = rank (the rank-0 matroid); TruncationRange outside [0, rank].
    Matroid truncation(int i) const;

    // Rank grows to rank+i; independent sets are the σ with nullity <= i.
    // ElongationRange outside [0, n-rank].
    Matroid elongation(int i) const;

    bool operator==(const Matroid& other) const {
        return n_ == other.n_ && bases_ == other.bases_;
    }

private:
    struct RankCache;

    Matroid() = default;
    static Matroid trusted(int n, std::vector<Mask> bases);
    void validate(bool strict) const;

    int n_ = 0;
    std::vector<Mask> bases_;
    std::shared_ptr<RankCache> cache_;  // shared between copies; deterministic
};

// Ring-convention Betti table of the independence complex.  Matroid tables
// do not depend on the field, so the result is computed over GF(p) and
// cross-checked over GF(2) and GF(3); any mismatch raises FieldDependenceBug.
BettiTable matroid_betti(const Matroid& m, int p);

// Predicted ideal-convention support of the fine-graded Betti numbers:
// pairs (i, σ) with σ inclusion-minimal among sets of nullity i+1.  The
// i = 0 layer is exactly the set of circuits.
std::set<std::pair<int, Mask>> nullity_support(const Matroid& m);

// Observed ideal-convention support of a computed fine grading (entries
// shifted down one homological step, the constant strand dropped).
std::set<std::pair<int, Mask>> fine_support_ideal(const GradedBetti& fine);

// Closed-form table of the first truncation of a rank-k matroid on n
// elements, obtained by the skeleton step with d = k-1.
BettiTable truncation_betti_closed_form(const BettiTable& ring_table, int n, int k);

// Support shift between consecutive elongations, ideal convention:
// β_{i,j}(elongation l) ≠ 0  ⟺  β_{i-1,j}(elongation l+1) ≠ 0 for all i >= 1.
// ElongationRange unless 0 <= l < n - rank.
bool elongation_shift_check(const Matroid& m, int l);

// Two rank-5 matroids on 8 elements whose ideals resolve identically while
// their first elongations do not: equal Betti tables, different elongation
// tables, with nonzero-entry multisets {1,5,5} and {2,3,4}.
struct CounterexampleReport {
    BettiTable table_m, table_n;            // ideal convention
    BettiTable elongation_m, elongation_n;  // ideal convention, first elongation
    bool base_tables_equal = false;
    bool elongation_tables_differ = false;
    std::vector<std::int64_t> m_values, n_values;  // sorted nonzero entries
    bool multisets_match = false;

    bool ok() const {
        return base_tables_equal && elongation_tables_differ && multisets_match;
    }
    std::string to_string() const;
};

CounterexampleReport counterexample_report();

// The built-in basis lists behind counterexample_report.
const std::vector<std::vector<int>>& counterexample_bases_m();
const std::vector<std::vector<int>>& counterexample_bases_n();

}  // namespace skelbetti
