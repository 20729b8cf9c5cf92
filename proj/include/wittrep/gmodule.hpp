#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wittrep/subspace.hpp"
#include "wittrep/witt_algebra.hpp"

namespace wittrep {

/// Identity card of a simple restricted module: highest-weight label lambda of
/// L(lambda), the e_0-weight mu of its vector killed by e_{-1} (the L^-(mu)
/// label), and its dimension.
struct SimpleLabel {
    FpScalar lambda = 0;
    FpScalar lowest_weight = 0;
    std::size_t dim = 0;

    bool operator==(const SimpleLabel&) const = default;
};

/// dim L(lambda): 1 if lambda = 0, p-1 if lambda = p-1, p otherwise.
std::size_t simple_dim(std::uint64_t p, FpScalar lambda);

/// lambda -> mu of the label correspondence L(lambda) = L^-(mu).
FpScalar lowest_weight_of(std::uint64_t p, FpScalar lambda);

/// mu -> lambda, inverse of the above.
FpScalar lambda_from_lowest_weight(std::uint64_t p, FpScalar mu);

SimpleLabel make_simple_label(std::uint64_t p, FpScalar lambda);

/// A restricted W(1)-module given by its p action matrices rho(e_{-1}),...,
/// rho(e_{p-2}), with an optional integer degree per basis vector. Vectors
/// are columns; rho(e_i) has shape dim x dim.
///
/// Construction through `make_module` validates Lie compatibility,
/// restrictedness, and (when degrees are present) graded compatibility.
struct GradedGModule {
    std::uint64_t p = 5;
    std::size_t dim = 0;
    std::vector<FpMatrix> action; // index i+1 holds rho(e_i)
    std::optional<std::vector<int>> degrees;
    std::optional<std::vector<std::string>> basis_names;

    const FpMatrix& act(int i) const {
        if (i < -1 || i + 1 >= static_cast<int>(action.size()))
            throw std::out_of_range("action index out of range");
        return action[static_cast<std::size_t>(i + 1)];
    }
    int max_index() const { return static_cast<int>(p) - 2; }
};

/// Violations of the module axioms; empty means valid.
std::vector<std::string> validate_module(const GradedGModule& m);

/// Validating constructor; throws std::runtime_error listing violations.
GradedGModule make_module(std::uint64_t p, std::vector<FpMatrix> action,
                          std::optional<std::vector<int>> degrees = std::nullopt,
                          std::optional<std::vector<std::string>> names = std::nullopt);

/// A(1) = k[x]/(x^p) with e_k.x^j = j x^(j+k).
GradedGModule natural_module(std::uint64_t p);

/// Verma module Z(lambda): e_k.m_j = (j+k+1+(k+1) lambda) m_(j+k).
GradedGModule verma_module(std::uint64_t p, FpScalar lambda);

/// L(lambda) together with its label.
std::pair<GradedGModule, SimpleLabel> simple_module(std::uint64_t p, FpScalar lambda);

/// The adjoint module in the basis e_{-1},...,e_{p-2}, degrees -1..p-2.
GradedGModule adjoint_module(std::uint64_t p);

/// A_(2) = A(1) (x) A(1) as k[x1,x2]/(x1^p,x2^p), monomial basis lexicographic
/// in (a1,a2) (index a1*p + a2), degree a1+a2. Built from the two-variable
/// derivation formula and cross-checked against the Kronecker sum.
GradedGModule tensor_square_natural(std::uint64_t p);

/// Kronecker-sum module on the tensor product of two modules.
GradedGModule tensor_product(const GradedGModule& a, const GradedGModule& b);

/// Eigenspace of rho(e_0) per lambda in F_p; dims must sum to dim(m).
std::vector<Subspace> weight_decomposition(const GradedGModule& m);

bool is_invariant(const GradedGModule& m, const Subspace& s);

/// Induced action on the non-pivot coordinates; requires s invariant.
GradedGModule quotient_module(const GradedGModule& m, const Subspace& s);

/// Action restricted to an invariant subspace, in its RREF basis coordinates.
GradedGModule restrict_module(const GradedGModule& m, const Subspace& s);

/// Identify a simple module by (dim ker rho(e_{-1}), its e_0-weight, dim).
/// Throws if the input does not match a known simple.
SimpleLabel identify_simple(const GradedGModule& m);

} // namespace wittrep
