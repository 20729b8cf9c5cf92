#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "wittrep/gmodule.hpp"

namespace wittrep {

/// Descending chain of submodule dimensions with one identified simple
/// factor per step and the resulting Grothendieck multiplicity vector.
struct CompositionReport {
    std::size_t module_dim = 0;
    std::vector<std::size_t> chain;     // module_dim, ..., 0
    std::vector<SimpleLabel> factors;   // factors[i] is chain[i]/chain[i+1]
    std::vector<std::size_t> grothendieck; // indexed by lambda

    bool operator==(const CompositionReport&) const = default;
};

/// Smallest subspace containing the generators and closed under every
/// rho(e_i); worklist closure with RREF insertion.
Subspace spin(const GradedGModule& m, const std::vector<std::vector<FpScalar>>& generators);

/// Spin under rho(e_0),...,rho(e_{p-2}) only (the b+ closure).
Subspace spin_bplus(const GradedGModule& m, const std::vector<std::vector<FpScalar>>& generators);

/// Coordinate subspace of the degree-d basis vectors (requires degrees).
Subspace degree_component(const GradedGModule& m, int degree);

/// Graded component of a graded subspace: s ∩ (degree-d block).
Subspace graded_piece(const GradedGModule& m, const Subspace& s, int degree);

/// Nonzero intersections of ker rho(e_{-1}) with each degree component.
std::map<int, Subspace> lowest_weight_vectors_by_degree(const GradedGModule& m);

/// Nonzero intersections of ker rho(e_{-1}) with each e_0-weight component.
std::map<FpScalar, Subspace> lowest_weight_vectors_by_weight(const GradedGModule& m);

/// dim of the b+ span of a homogeneous vector v, per degree. Throws if v is
/// not homogeneous.
std::map<int, std::size_t> graded_bplus_spin_dims(const GradedGModule& m,
                                                  const std::vector<FpScalar>& v);

/// All minimal nonzero submodules, found by spinning weight vectors killed
/// by e_{-1}. Projective enumeration is capped at weight components of
/// dimension <= enum_cap.
std::vector<Subspace> minimal_submodules(const GradedGModule& m,
                                         std::size_t enum_cap = 5);

Subspace socle(const GradedGModule& m, std::size_t enum_cap = 5);
bool is_simple(const GradedGModule& m, std::size_t enum_cap = 5);

/// True only when the socle is simple (which certifies indecomposability);
/// false is inconclusive for indecomposability in general but our callers
/// only use it on modules with a constructed counterexample.
bool is_indecomposable_via_socle(const GradedGModule& m, std::size_t enum_cap = 5);

/// Deterministic composition series: repeatedly pick the canonically first
/// minimal submodule, identify it, quotient, recurse. With a seed, candidate
/// order is shuffled instead (the factor multiset must not change).
CompositionReport composition_series(const GradedGModule& m,
                                     std::optional<std::uint64_t> shuffle_seed = std::nullopt,
                                     std::size_t enum_cap = 5);

/// Grothendieck vectors: multiset equality helper.
std::vector<std::size_t> grothendieck_vector(const CompositionReport& r, std::uint64_t p);

} // namespace wittrep
