#include "skelbetti/gf_linalg.hpp"

#include <algorithm>

namespace skelbetti {

void require_prime(int p) {
    if (p >= (1 << 16))
        throw TooLarge("modulus " + std::to_string(p) + " exceeds 2^16 - 1");
    if (p < 2) throw NotPrime(std::to_string(p) + " is not a prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw NotPrime(std::to_string(p) + " is not a prime");
}

std::int64_t mod_inverse(std::int64_t a, int p) {
    // Fermat: a^(p-2) mod p.
    std::int64_t result = 1, base = ((a % p) + p) % p;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return result;
}

GFMatrix::GFMatrix(int rows, int cols, int p) : rows_(rows), cols_(cols), p_(p) {
    require_prime(p);
    data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

void GFMatrix::set(int r, int c, std::int64_t value) {
    data_[static_cast<std::size_t>(r) * cols_ + c] = ((value % p_) + p_) % p_;
}

bool GFMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
}

int GFMatrix::rank() const {
    std::vector<std::int64_t> a = data_;
    auto at = [&](int r, int c) -> std::int64_t& {
        return a[static_cast<std::size_t>(r) * cols_ + c];
    };
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = col; c < cols_; ++c) std::swap(at(pivot, c), at(rank, c));
        std::int64_t inv = mod_inverse(at(rank, col), p_);
        for (int r = rank + 1; r < rows_; ++r) {
            std::int64_t factor = at(r, col) * inv % p_;
            if (factor == 0) continue;
            for (int c = col; c < cols_; ++c)
                at(r, c) = (at(r, c) + (p_ - factor) * at(rank, c)) % p_;
        }
        ++rank;
    }
    return rank;
}

GFMatrix matmul(const GFMatrix& a, const GFMatrix& b) {
    GFMatrix out(a.rows(), b.cols(), a.modulus());
    for (int r = 0; r < a.rows(); ++r)
        for (int k = 0; k < a.cols(); ++k) {
            std::int64_t lhs = a.at(r, k);
            if (lhs == 0) continue;
            for (int c = 0; c < b.cols(); ++c)
                out.set(r, c, out.at(r, c) + lhs * b.at(k, c));
        }
    return out;
}

GFMatrix boundary_matrix(const std::vector<Mask>& to, const std::vector<Mask>& from, int p) {
    GFMatrix b(static_cast<int>(to.size()), static_cast<int>(from.size()), p);
    for (int c = 0; c < static_cast<int>(from.size()); ++c) {
        Mask sigma = from[c];
        int sign = 1;
        Mask rest = sigma;
        while (rest) {
            Mask low = rest & (~rest + 1);  // remove vertices in ascending order
            auto it = std::lower_bound(to.begin(), to.end(), sigma ^ low);
            if (it != to.end() && *it == (sigma ^ low))
                b.set(static_cast<int>(it - to.begin()), c, sign);
            sign = -sign;
            rest ^= low;
        }
    }
    return b;
}

GFMatrix boundary_matrix(const SimplicialComplex& complex, int i, int p) {
    return boundary_matrix(complex.faces_of_cardinality(i),
                           complex.faces_of_cardinality(i + 1), p);
}

std::int64_t HomologyProfile::reduced_dim(int degree) const {
    int k = degree + 1;
    if (k < 0 || k >= static_cast<int>(dims.size())) return 0;
    return dims[k];
}

bool HomologyProfile::trivial() const {
    return std::all_of(dims.begin(), dims.end(), [](std::int64_t d) { return d == 0; });
}

HomologyProfile reduced_homology(const SimplicialComplex& complex, int p) {
    require_prime(p);
    int d = complex.dimension();
    // faces[k] holds the k-element faces, the chain group in homological
    // degree k-1.
    std::vector<std::vector<Mask>> faces(d + 2);
    for (int k = 0; k <= d + 1; ++k) faces[k] = complex.faces_of_cardinality(k);

    // ranks[k] = rank of the boundary map leaving the k-element faces.
    std::vector<int> ranks(d + 3, 0);
    for (int k = 1; k <= d + 1; ++k)
        ranks[k] = boundary_matrix(faces[k - 1], faces[k], p).rank();

    HomologyProfile h;
    h.p = p;
    h.dims.assign(d + 2, 0);
    for (int k = 0; k <= d + 1; ++k)
        h.dims[k] = static_cast<std::int64_t>(faces[k].size()) - ranks[k] - ranks[k + 1];
    return h;
}

}  // namespace skelbetti
