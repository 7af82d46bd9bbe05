#include "skelbetti/transfer.hpp"

#include <numeric>

namespace skelbetti {

void TransferInput::validate() const {
    if (table.convention != Convention::ring)
        throw InconsistentTable("transfer expects a ring-convention table");
    if (d < 1)
        throw InconsistentTable("dimension " + std::to_string(d) +
                                " below 1; there is no lower skeleton to step to");
    if (n < d + 1)
        throw InconsistentTable("ground set of size " + std::to_string(n) +
                                " cannot carry a " + std::to_string(d) + "-complex");
    if (table.at(0, 0) != 1)
        throw InconsistentTable("table lacks the constant strand entry (0,0)=1");
    for (const auto& [key, value] : table.entries)
        if (key.first == 0 && key.second != 0)
            throw InconsistentTable("nonzero entry (0," + std::to_string(key.second) +
                                    ") outside the constant strand");
}

std::int64_t top_face_count(const TransferInput& in) {
    in.validate();
    int k = in.n - in.d - 1;
    std::int64_t total = 0;
    for (const auto& [key, value] : in.table.entries) {
        auto [i, j] = key;
        if (j < k) continue;
        std::int64_t term = binom(j, k) * value;
        total += ((in.n + in.d + i + 1) % 2 == 0) ? term : -term;
    }
    if (total < 0)
        throw InconsistentTable("recovered top-face count " + std::to_string(total) +
                                " is negative; not the table of a " +
                                std::to_string(in.d) + "-complex");
    return total;
}

BettiTable transfer(const TransferInput& in) {
    std::int64_t delta = top_face_count(in);  // validates
    int n = in.n, d = in.d;

    BettiTable out;
    out.p = in.table.p;
    out.convention = Convention::ring;
    out.n = n;
    for (const auto& [key, value] : in.table.entries)
        if (key.second <= d + key.first - 1) out.add(key.first, key.second, value);
    for (int i = 1; i <= n; ++i) {
        std::int64_t v = in.table.at(i, d + i) - in.table.at(i - 1, d + i);
        if (i <= n - d) v += binom(n - d - 1, i - 1) * delta;
        if (v < 0)
            throw InconsistentTable("transfer produced negative entry " + std::to_string(v) +
                                    " at (i,j)=(" + std::to_string(i) + "," +
                                    std::to_string(d + i) + ")");
        out.add(i, d + i, v);
    }
    return out;
}

std::vector<BettiTable> transfer_chain(const TransferInput& in, int steps) {
    if (steps < 0 || steps > in.d)
        throw SkeletonRangeError("step count " + std::to_string(steps) +
                                 " outside [0, " + std::to_string(in.d) + "]");
    std::vector<BettiTable> out;
    TransferInput current = in;
    for (int s = 1; s <= steps; ++s) {
        try {
            out.push_back(transfer(current));
        } catch (const InconsistentTable& e) {
            throw InconsistentTable("step " + std::to_string(s) + ": " + e.what());
        }
        current = TransferInput{out.back(), current.n, current.d - 1};
    }
    return out;
}

bool pd_bound_check(const SimplicialComplex& complex, int p) {
    int d = complex.dimension();
    if (d < 1)
        throw SkeletonRangeError("complex of dimension " + std::to_string(d) +
                                 " has no (d-1)-skeleton to compare");
    int pd_full = hochster_table(complex, p).projective_dimension();
    int pd_skel = hochster_table(complex.skeleton(d - 1), p).projective_dimension();
    return pd_skel <= 1 + pd_full;
}

bool cm_inheritance_check(const SimplicialComplex& complex, int p) {
    int d = complex.dimension();
    if (d < 1)
        throw SkeletonRangeError("complex of dimension " + std::to_string(d) +
                                 " has no (d-1)-skeleton to compare");
    if (!depth_and_cm(complex, p).cohen_macaulay) return true;
    return depth_and_cm(complex.skeleton(d - 1), p).cohen_macaulay;
}

int infer_dimension(const BettiTable& ring_table) {
    if (ring_table.entries.empty())
        throw InconsistentTable("empty table has no Hilbert numerator");
    std::vector<std::int64_t> numerator(ring_table.max_degree() + 1, 0);
    for (const auto& [key, value] : ring_table.entries)
        numerator[key.second] += (key.first % 2 == 0 ? value : -value);

    int multiplicity = 0;
    while (std::accumulate(numerator.begin(), numerator.end(), std::int64_t{0}) == 0) {
        // Divide by (1-t): running prefix sums form the quotient.
        std::vector<std::int64_t> quotient(numerator.size() - 1, 0);
        std::int64_t acc = 0;
        for (std::size_t m = 0; m + 1 < numerator.size(); ++m) {
            acc += numerator[m];
            quotient[m] = acc;
        }
        numerator = std::move(quotient);
        ++multiplicity;
        if (numerator.empty()) break;
    }
    int d = ring_table.n - 1 - multiplicity;
    if (d < -1)
        throw InconsistentTable("Hilbert numerator vanishes to order " +
                                std::to_string(multiplicity) +
                                ", impossible for a complex on " +
                                std::to_string(ring_table.n) + " vertices");
    return d;
}

}  // namespace skelbetti
