#pragma once

#include <utility>
#include <vector>

#include "wittrep/matrix.hpp"

namespace wittrep {

/// A subspace of F_p^n held as its canonical RREF basis. Two Subspace values
/// describe the same set of vectors iff they compare equal.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient, std::uint64_t p) {
        Subspace s;
        s.ambient_ = ambient;
        s.basis_ = FpMatrix(0, ambient, p);
        return s;
    }

    static Subspace full(std::size_t ambient, std::uint64_t p) {
        return from_matrix(FpMatrix::identity(ambient, p));
    }

    /// Row space of an arbitrary matrix, canonicalized.
    static Subspace from_matrix(const FpMatrix& m);

    static Subspace from_vectors(const std::vector<std::vector<FpScalar>>& vecs,
                                 std::size_t ambient, std::uint64_t p) {
        return from_matrix(FpMatrix::from_rows(vecs, ambient, p));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    std::uint64_t modulus() const { return basis_.modulus(); }
    const FpMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const std::vector<FpScalar>& v) const;
    bool contains(const Subspace& other) const;

    /// Residue of v modulo this subspace (pivot coordinates eliminated).
    std::vector<FpScalar> reduce(const std::vector<FpScalar>& v) const;

    /// Coordinates of v in the RREF basis; requires contains(v).
    std::vector<FpScalar> coordinates(const std::vector<FpScalar>& v) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    /// Total order on canonical bases (dim, then entrywise lex); used for
    /// deterministic tie-breaking.
    bool lex_less(const Subspace& o) const;

private:
    std::size_t ambient_ = 0;
    FpMatrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// Kernel (right null space) of m, canonical.
Subspace kernel(const FpMatrix& m);

/// Surjection q: F^n -> F^(n-dim s) with kernel exactly s, together with a
/// right inverse section (q * section = identity). Quotient coordinates are
/// the non-pivot coordinates of s's RREF basis.
std::pair<FpMatrix, FpMatrix> quotient_map(std::size_t ambient, const Subspace& s);

} // namespace wittrep
