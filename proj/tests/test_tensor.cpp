#include <doctest.h>

#include "wittrep/tensor.hpp"

using namespace wittrep;

TEST_CASE("S_2 split") {
    const std::uint64_t p = 5;
    TensorDecomposition d = s2_split(p);
    CHECK(d.As.dim() == 15);
    CHECK(d.Aa.dim() == 10);
    // swap eigenvectors
    std::vector<FpScalar> x1x2(p * p, 0);
    x1x2[1 * p + 1] = 1;
    CHECK(d.As.contains(x1x2));
    std::vector<FpScalar> x1_minus_x2(p * p, 0);
    x1_minus_x2[1 * p] = 1;
    x1_minus_x2[1] = p - 1;
    CHECK(d.Aa.contains(x1_minus_x2));
    CHECK(is_invariant(d.A2, d.As));
    CHECK(is_invariant(d.A2, d.Aa));
}

TEST_CASE("canonical submodules and top levels") {
    for (std::uint64_t p : {5, 7}) {
        CAPTURE(p);
        TensorDecomposition d = s2_split(p);
        canonical_submodules(d);
        CHECK(d.As_prime.dim() == p);
        CHECK(d.Aa_prime.dim() == p - 1);
        CHECK(d.AsPlus.dim == p * (p - 1) / 2);
        CHECK(d.AaPlus.dim == (p - 1) * (p - 2) / 2);
        // constants sit inside As'
        std::vector<FpScalar> ones(p * p, 0);
        ones[0] = 1;
        CHECK(d.As_prime.contains(ones));
        // Aa' is simple L(p-1)
        GradedGModule aap = restrict_module(d.A2, d.Aa_prime);
        CHECK(identify_simple(aap) == make_simple_label(p, p - 1));
    }
}

TEST_CASE("weight table matches the closed forms") {
    for (std::uint64_t p : {5, 7, 11}) {
        CAPTURE(p);
        TensorDecomposition d = s2_split(p);
        canonical_submodules(d);
        WeightTable t = weight_table(d);
        CHECK(t.matches);
        // row sums equal module dims
        std::size_t a_total = 0;
        for (std::size_t v : t.actual[0]) a_total += v;
        CHECK(a_total == p * p);
    }
}

TEST_CASE("chains and kernel dimensions") {
    const std::uint64_t p = 5;
    TensorDecomposition d = build_pipeline(p);

    SUBCASE("sym chain dims are 10 > 5 > 0") {
        std::vector<std::size_t> dims;
        for (const Subspace& s : d.sym_chain) dims.push_back(s.dim());
        CHECK(dims == std::vector<std::size_t>{10, 5, 0});
    }
    SUBCASE("alt chain dims are 6 > 5 > 0") {
        std::vector<std::size_t> dims;
        for (const Subspace& s : d.alt_chain) dims.push_back(s.dim());
        CHECK(dims == std::vector<std::size_t>{6, 5, 0});
    }
    SUBCASE("Aa+ splits as spin(v_3) (+) k.v_p") {
        const Subspace& block = d.alt_cyclic.front();
        const Subspace& line = d.alt_cyclic.back();
        CHECK(block.dim() == 5);
        CHECK(line.dim() == 1);
        CHECK(subspace_intersect(block, line).dim() == 0);
        CHECK(subspace_sum(block, line).dim() == d.AaPlus.dim);
        CHECK(is_invariant(d.AaPlus, line));
        // the degree-p kernel vector does not lie in the cyclic block
        CHECK_FALSE(block.contains(d.alt_generators.back()));
    }
    SUBCASE("v_{2,s} spans the degree-2 kernel piece") {
        Subspace piece = subspace_intersect(kernel(d.AsPlus.act(-1)),
                                            degree_component(d.AsPlus, 2));
        CHECK(piece.dim() == 1);
        CHECK(d.sym_generators[0] == piece.basis().row(0));
    }
    SUBCASE("odd symmetric degrees have no kernel") {
        for (int i = 3; i <= 5; i += 2)
            CHECK(subspace_intersect(kernel(d.AsPlus.act(-1)),
                                     degree_component(d.AsPlus, i))
                      .dim() == 0);
    }
}

TEST_CASE("dim As+[4] = p(p-3)/2") {
    for (std::uint64_t p : {5, 7, 11}) {
        CAPTURE(p);
        TensorDecomposition d = build_pipeline(p);
        REQUIRE(d.sym_chain.size() >= 2);
        CHECK(d.sym_chain[1].dim() == p * (p - 3) / 2);
    }
}

TEST_CASE("graded b+ dims follow floor(l/2)+1 up to l+i=p") {
    TensorDecomposition d = build_pipeline(7);
    CHECK(graded_dim_failures(d).empty());
    // spot check: l = p-2 on v_{2,s} gives (p-1)/2
    auto dims = graded_bplus_spin_dims(d.AsPlus, d.sym_generators[0]);
    CHECK(dims[7] == 3);
}

TEST_CASE("p=5 exception to the graded dimension lemma") {
    TensorDecomposition d = build_pipeline(5);
    CHECK(p5_degree6_failures(d).empty());
    CHECK(degree_component(d.AsPlus, 6).dim() == 2);
    // while the lemma's formula at l+i = 6 > p would predict 3
    auto dims = graded_bplus_spin_dims(d.AsPlus, d.sym_generators[0]);
    CHECK(dims[6] == 2);
}

TEST_CASE("injectivity and surjectivity suites") {
    for (std::uint64_t p : {5, 7}) {
        CAPTURE(p);
        TensorDecomposition d = build_pipeline(p);
        CHECK(injectivity_failures(d.A2).empty());
        CHECK(surjectivity_failures(d).empty());
    }
}

TEST_CASE("main theorem") {
    for (std::uint64_t p : {5, 7}) {
        CAPTURE(p);
        TensorDecomposition d = build_pipeline(p);
        MainTheoremResult r = verify_main_theorem(d);
        for (const std::string& f : r.failures) FAIL_CHECK(f);
        CHECK(r.sym_socle_simple);
        CHECK(r.alt_splits);
        CHECK(r.alt_block_socle_simple);

        // factor labels in L^- notation, top-down: 2,4,...,p-1 for the sym
        // chain; 0 (the split-off trivial line), then 3,5,...,p-2 for alt
        std::vector<FpScalar> sym_mu, alt_mu;
        for (const SimpleLabel& l : r.sym_chain_report.factors)
            sym_mu.push_back(l.lowest_weight);
        for (const SimpleLabel& l : r.alt_chain_report.factors)
            alt_mu.push_back(l.lowest_weight);
        std::vector<FpScalar> want_sym, want_alt;
        for (FpScalar i = 2; i <= p - 1; i += 2) want_sym.push_back(i);
        want_alt.push_back(0);
        for (FpScalar j = 3; j <= p - 2; j += 2) want_alt.push_back(j);
        CHECK(sym_mu == want_sym);
        CHECK(alt_mu == want_alt);
    }
}

TEST_CASE("Grothendieck identities") {
    for (std::uint64_t p : {5, 7}) {
        CAPTURE(p);
        TensorDecomposition d = build_pipeline(p);
        GrothendieckResult r = grothendieck_checks(d);
        for (const std::string& f : r.failures) FAIL_CHECK(f);
        CHECK(r.a2_direct == r.a2_expected);
        CHECK(r.a2_assembled == r.a2_expected);
        CHECK(r.lxl_direct == r.lxl_expected);
        // dimension bookkeeping: sum of factor dims is p^2 resp. (p-1)^2
        std::size_t total = 0;
        for (FpScalar lam = 0; lam < p; ++lam)
            total += r.a2_direct[lam] * simple_dim(p, lam);
        CHECK(total == p * p);
        total = 0;
        for (FpScalar lam = 0; lam < p; ++lam)
            total += r.lxl_direct[lam] * simple_dim(p, lam);
        CHECK(total == (p - 1) * (p - 1));
    }
}
