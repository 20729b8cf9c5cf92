#pragma once

#include "wittrep/structure.hpp"

namespace wittrep {

/// State of the A_(2) = A(1) (x) A(1) pipeline for one prime: the S_2
/// eigenspace split, the canonical submodules, the top-level quotients, and
/// the explicit descending chains inside them.
struct TensorDecomposition {
    std::uint64_t p = 5;
    GradedGModule A2;

    // subspaces of A2's coordinate space
    Subspace As, Aa;
    Subspace As_prime, Aa_prime;

    // As/Aa as modules in their own coordinates, plus the canonical
    // submodules re-expressed in those coordinates
    GradedGModule AsMod, AaMod;
    Subspace As_prime_in_As, Aa_prime_in_Aa;

    // top-level quotients (graded)
    GradedGModule AsPlus, AaPlus;

    // generators v_{i,s} (i = 2,4,...,p-1) and v_{j,a} (j = 3,5,...,p), one
    // per kernel degree, with their cyclic submodules spin(v)
    std::vector<std::vector<FpScalar>> sym_generators, alt_generators;
    std::vector<int> sym_degrees, alt_degrees;
    std::vector<Subspace> sym_cyclic, alt_cyclic;

    // descending composition chains, ending with the zero subspace.
    //   sym: As+ = spin(v_2) > spin(v_4) > ... > spin(v_{p-1}) > 0
    //   alt: Aa+ > spin(v_3) > ... > spin(v_{p-2}) > 0
    // The alt chain is one step longer than its generator list suggests:
    // spin(v_3) has codimension 1, and the degree-p generator v_p spans an
    // invariant complement line, so Aa+ = spin(v_3) (+) k.v_p.
    std::vector<Subspace> sym_chain, alt_chain;
    // lowest-weight degree of the factor chain[t]/chain[t+1]
    std::vector<int> sym_factor_degrees, alt_factor_degrees;
};

/// Coordinates of inner (a subspace of outer) in outer's RREF basis.
Subspace coordinates_in(const Subspace& outer, const Subspace& inner);

/// Split A_(2) into the +1/-1 eigenspaces of the variable swap and check the
/// split is rho-equivariant.
TensorDecomposition s2_split(std::uint64_t p);

/// Build As', Aa', the top levels, and assert the identifications
/// As' = Z(p-1) (factors L(0), L(p-1)) and Aa' = L(p-1).
void canonical_submodules(TensorDecomposition& d);

struct WeightTable {
    std::vector<std::string> row_names;
    std::vector<std::vector<std::size_t>> actual;   // per row, dims for weight 0..p-1
    std::vector<std::vector<std::size_t>> expected; // closed forms
    bool matches = false;
};

/// Weight-space dimension table for A, As, Aa, A+, As+, Aa+ against the
/// closed forms; A+ is the quotient of A_(2) by As' + Aa'.
WeightTable weight_table(const TensorDecomposition& d);

/// Extract v_{i,s} / v_{j,a} and spin the chains; asserts the kernel
/// dimension pattern, the strict chain inclusions, As+ = spin(v_2), and the
/// alternating splitting Aa+ = spin(v_3) (+) k.v_p.
void build_chains(TensorDecomposition& d);

struct MainTheoremResult {
    CompositionReport sym_chain_report, alt_chain_report;
    CompositionReport sym_oracle, alt_oracle;
    bool sym_socle_simple = false;   // As+ indecomposable
    bool alt_splits = false;         // Aa+ = spin(v_3) (+) k.v_p
    bool alt_block_socle_simple = false; // spin(v_3) indecomposable
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

/// Check the composition series of both top levels: successive chain
/// quotients simple with the predicted lowest weights, As+ indecomposable
/// (simple socle), Aa+ split into the indecomposable block spin(v_3) plus a
/// trivial line, and agreement with the generic composition-series oracle.
MainTheoremResult verify_main_theorem(const TensorDecomposition& d);

struct GrothendieckResult {
    std::vector<std::size_t> a2_assembled, a2_direct, a2_expected;
    std::vector<std::size_t> lxl_direct, lxl_expected;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

/// The two Grothendieck-group identities, each computed twice: assembled
/// from the pipeline pieces and directly by the generic oracle.
GrothendieckResult grothendieck_checks(const TensorDecomposition& d);

/// Convenience: run the full pipeline for one prime.
TensorDecomposition build_pipeline(std::uint64_t p);

/// rho(e_s) restricted to the degree-n component of A_(2) has zero kernel
/// for s in {1,2}, n > 0, n+s < p. Returns one message per violation.
std::vector<std::string> injectivity_failures(const GradedGModule& a2);

/// For each cyclic chain submodule with nonzero lowest weight, rho(e_{-1})
/// maps V_{l+i+1} onto V_{l+i} for 0 <= l < p-2.
std::vector<std::string> surjectivity_failures(const TensorDecomposition& d);

/// dim u(b+)_l . v = floor(l/2)+1 whenever l+i < p, for every chain
/// generator v of degree i. On the symmetric side the formula extends to
/// l+i = p; on the alternating side the dimension drops by one there
/// (spin(v_{j,a}) misses the degree-p kernel line).
std::vector<std::string> graded_dim_failures(const TensorDecomposition& d);

/// p = 5 only: the degree-6 component of As+ is 2-dimensional, spanned by
/// the images of x1^3 x2^3 and x1^4 x2^2 + x1^2 x2^4.
std::vector<std::string> p5_degree6_failures(const TensorDecomposition& d);

} // namespace wittrep
