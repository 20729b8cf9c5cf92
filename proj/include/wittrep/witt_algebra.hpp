#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wittrep/fp.hpp"

namespace wittrep {

/// A scalar multiple of a single basis element e_index, or zero.
struct BracketTerm {
    FpScalar coeff = 0;
    std::optional<int> index; // nullopt means the result is zero
    bool is_zero() const { return coeff == 0 || !index; }
};

struct AxiomCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

/// The restricted Lie algebra W(1) for a prime p > 3: basis e_{-1},...,e_{p-2}
/// with e_i = x^{i+1} d/dx, bracket [e_i,e_j] = (j-i) e_{i+j}, and p-map
/// e_0^[p] = e_0, e_i^[p] = 0 otherwise.
class WittAlgebra {
public:
    explicit WittAlgebra(std::uint64_t p) : p_(p) { require_valid_prime(p); }

    std::uint64_t p() const { return p_; }
    std::size_t dimension() const { return p_; }
    int min_index() const { return -1; }
    int max_index() const { return static_cast<int>(p_) - 2; }

    bool index_in_range(int i) const { return i >= -1 && i <= max_index(); }

    BracketTerm bracket(int i, int j) const;
    BracketTerm pmap(int i) const;

    /// Index sets of the triangular pieces b+ = g_0 + g^+ and b- = g_0 + g^-.
    std::vector<int> bplus_indices() const {
        std::vector<int> idx;
        for (int i = 0; i <= max_index(); ++i) idx.push_back(i);
        return idx;
    }
    std::vector<int> bminus_indices() const { return {-1, 0}; }

private:
    std::uint64_t p_;
};

/// Machine-checks antisymmetry, the Jacobi identity over all basis triples,
/// and restrictedness ad(e_i)^p = ad(e_i^[p]) as p x p matrices.
std::vector<AxiomCheck> verify_structure(std::uint64_t p);

} // namespace wittrep
