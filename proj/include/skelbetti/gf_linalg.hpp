#pragma once

#include <cstdint>
#include <vector>

#include "skelbetti/errors.hpp"
#include "skelbetti/simplicial_complex.hpp"

namespace skelbetti {

// Throws NotPrime / TooLarge unless 2 <= p < 2^16 and p is prime.
void require_prime(int p);

// a^-1 mod p for prime p and a not divisible by p.
std::int64_t mod_inverse(std::int64_t a, int p);

// Dense matrix over GF(p). Entries are kept reduced into [0, p); with
// p < 2^16 every product fits comfortably in 64 bits.
class GFMatrix {
public:
    GFMatrix(int rows, int cols, int p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int modulus() const { return p_; }

    std::int64_t at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, std::int64_t value);

    bool is_zero() const;

    // Rank by Gaussian elimination on a scratch copy.
    int rank() const;

private:
    int rows_, cols_, p_;
    std::vector<std::int64_t> data_;
};

GFMatrix matmul(const GFMatrix& a, const GFMatrix& b);

// Matrix of the simplicial boundary map sent from the span of `from`
// (k-element faces) to the span of `to` ((k-1)-element faces), both sorted
// by increasing mask value. For σ = {v_1 < ... < v_k} the boundary is
// Σ_r (-1)^(r-1) (σ \ v_r); in particular each vertex maps to ∅ with
// coefficient +1.
GFMatrix boundary_matrix(const std::vector<Mask>& to, const std::vector<Mask>& from, int p);

// δ_i of the reduced chain complex of Δ: columns are the i-dimensional
// faces, rows the (i-1)-dimensional ones, both in increasing mask order.
// Out-of-range i yields an empty matrix of the correct shape.
GFMatrix boundary_matrix(const SimplicialComplex& complex, int i, int p);

// Dimensions of reduced simplicial homology over GF(p).
struct HomologyProfile {
    int p = 2;
    // dims[k] = dim H~_(k-1) for k = 0 .. dim+1, so the list has length
    // dim+2 and starts at homological degree -1; dims[0] is 1 exactly for
    // the complex {∅}.
    std::vector<std::int64_t> dims;

    std::int64_t reduced_dim(int degree) const;
    bool trivial() const;  // all dimensions zero
};

HomologyProfile reduced_homology(const SimplicialComplex& complex, int p);

}  // namespace skelbetti
