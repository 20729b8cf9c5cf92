#include "wittrep/tensor.hpp"

#include <algorithm>

namespace wittrep {

Subspace coordinates_in(const Subspace& outer, const Subspace& inner) {
    std::vector<std::vector<FpScalar>> coords;
    for (std::size_t r = 0; r < inner.dim(); ++r)
        coords.push_back(outer.coordinates(inner.basis().row(r)));
    return Subspace::from_vectors(coords, outer.dim(), outer.modulus());
}

namespace {

FpMatrix swap_matrix(std::uint64_t p) {
    const std::size_t n = p * p;
    FpMatrix t(n, n, p);
    for (std::size_t a1 = 0; a1 < p; ++a1)
        for (std::size_t a2 = 0; a2 < p; ++a2)
            t.at(a2 * p + a1, a1 * p + a2) = 1;
    return t;
}

} // namespace

TensorDecomposition s2_split(std::uint64_t p) {
    require_valid_prime(p);
    TensorDecomposition d;
    d.p = p;
    d.A2 = tensor_square_natural(p);
    const std::size_t n = p * p;
    FpMatrix t = swap_matrix(p);

    for (int i = -1; i <= d.A2.max_index(); ++i)
        if (t * d.A2.act(i) != d.A2.act(i) * t)
            throw std::runtime_error("s2_split: swap does not commute with rho(e_" +
                                     std::to_string(i) + ")");

    FpMatrix id = FpMatrix::identity(n, p);
    d.As = kernel(t - id);
    d.Aa = kernel(t + id);
    if (d.As.dim() != p * (p + 1) / 2 || d.Aa.dim() != p * (p - 1) / 2)
        throw std::runtime_error("s2_split: unexpected eigenspace dimensions");
    if (subspace_sum(d.As, d.Aa).dim() != n)
        throw std::runtime_error("s2_split: eigenspaces do not span A_(2)");

    d.AsMod = restrict_module(d.A2, d.As);
    d.AaMod = restrict_module(d.A2, d.Aa);
    return d;
}

void canonical_submodules(TensorDecomposition& d) {
    const std::uint64_t p = d.p;
    const std::size_t n = p * p;

    // As' = span{x1^i + x2^i}, Aa' = span{x1^i - x2^i}; monomial index
    // (a1,a2) -> a1*p + a2, so x1^i is i*p and x2^i is i.
    std::vector<std::vector<FpScalar>> sym_vecs, alt_vecs;
    for (std::size_t i = 0; i < p; ++i) {
        std::vector<FpScalar> v(n, 0);
        v[i * p] = fp_add(v[i * p], 1, p);
        v[i] = fp_add(v[i], 1, p);
        sym_vecs.push_back(std::move(v));
        if (i >= 1) {
            std::vector<FpScalar> w(n, 0);
            w[i * p] = 1;
            w[i] = p - 1;
            alt_vecs.push_back(std::move(w));
        }
    }
    d.As_prime = Subspace::from_vectors(sym_vecs, n, p);
    d.Aa_prime = Subspace::from_vectors(alt_vecs, n, p);

    if (d.As_prime.dim() != p || d.Aa_prime.dim() != p - 1)
        throw std::runtime_error("canonical submodules: unexpected dimensions");
    if (!d.As.contains(d.As_prime) || !d.Aa.contains(d.Aa_prime))
        throw std::runtime_error("canonical submodules: not inside the S_2 parts");
    if (!is_invariant(d.A2, d.As_prime) || !is_invariant(d.A2, d.Aa_prime))
        throw std::runtime_error("canonical submodules: not rho-invariant");

    // As' carries the composition factors of Z(p-1); Aa' is simple L(p-1).
    CompositionReport sp = composition_series(restrict_module(d.A2, d.As_prime));
    std::vector<std::size_t> expect(p, 0);
    expect[0] = 1;
    expect[p - 1] = 1;
    if (sp.grothendieck != expect)
        throw std::runtime_error("canonical submodules: As' is not Z(p-1)-shaped");
    GradedGModule aa_prime_mod = restrict_module(d.A2, d.Aa_prime);
    if (!is_simple(aa_prime_mod) ||
        identify_simple(aa_prime_mod) != make_simple_label(p, p - 1))
        throw std::runtime_error("canonical submodules: Aa' is not L(p-1)");

    d.As_prime_in_As = coordinates_in(d.As, d.As_prime);
    d.Aa_prime_in_Aa = coordinates_in(d.Aa, d.Aa_prime);
    d.AsPlus = quotient_module(d.AsMod, d.As_prime_in_As);
    d.AaPlus = quotient_module(d.AaMod, d.Aa_prime_in_Aa);
    if (d.AsPlus.dim != p * (p - 1) / 2)
        throw std::runtime_error("canonical submodules: dim As+ mismatch");
    if (d.AaPlus.dim != p * (p - 1) / 2 - (p - 1))
        throw std::runtime_error("canonical submodules: dim Aa+ mismatch");
    if (!d.AsPlus.degrees || !d.AaPlus.degrees)
        throw std::runtime_error("canonical submodules: top levels lost grading");
}

WeightTable weight_table(const TensorDecomposition& d) {
    const std::uint64_t p = d.p;
    WeightTable t;
    GradedGModule aplus =
        quotient_module(d.A2, subspace_sum(d.As_prime, d.Aa_prime));

    const GradedGModule* mods[] = {&d.A2, &d.AsMod, &d.AaMod,
                                   &aplus, &d.AsPlus, &d.AaPlus};
    t.row_names = {"A", "As", "Aa", "A+", "As+", "Aa+"};
    for (const GradedGModule* m : mods) {
        std::vector<Subspace> w = weight_decomposition(*m);
        std::vector<std::size_t> dims;
        for (const Subspace& s : w) dims.push_back(s.dim());
        t.actual.push_back(std::move(dims));
    }
    auto row = [&](std::size_t at0, std::size_t other) {
        std::vector<std::size_t> r(p, other);
        r[0] = at0;
        return r;
    };
    t.expected = {row(p, p),
                  row((p + 1) / 2, (p + 1) / 2),
                  row((p - 1) / 2, (p - 1) / 2),
                  row(p - 1, p - 2),
                  row((p - 1) / 2, (p - 1) / 2),
                  row((p - 1) / 2, (p - 3) / 2)};
    t.matches = t.actual == t.expected;
    return t;
}

namespace {

// Extract one generator per kernel degree and its cyclic submodule; asserts
// the kernel dimension pattern (dim 1 at first_degree's parity, 0 at the
// other) over degrees [first_degree, p].
void build_generators(const GradedGModule& top, int first_degree,
                      std::uint64_t p,
                      std::vector<std::vector<FpScalar>>& generators,
                      std::vector<int>& gen_degrees,
                      std::vector<Subspace>& cyclic, const char* tag) {
    Subspace ker_em1 = kernel(top.act(-1));
    int parity = first_degree % 2;
    for (int i = first_degree; i <= static_cast<int>(p); ++i) {
        std::size_t k = subspace_intersect(ker_em1, degree_component(top, i)).dim();
        std::size_t want = (i % 2 == parity) ? 1 : 0;
        if (k != want)
            throw std::runtime_error(std::string(tag) +
                                     ": kernel dimension at degree " +
                                     std::to_string(i) + " is " +
                                     std::to_string(k) + ", expected " +
                                     std::to_string(want));
    }
    for (int i = first_degree; i <= static_cast<int>(p); i += 2) {
        Subspace piece = subspace_intersect(ker_em1, degree_component(top, i));
        // RREF normalization: first nonzero coordinate is already 1.
        generators.push_back(piece.basis().row(0));
        gen_degrees.push_back(i);
        cyclic.push_back(spin(top, {generators.back()}));
    }
}

void assert_strictly_decreasing(const std::vector<Subspace>& chain,
                                const std::vector<int>& factor_degrees,
                                const char* tag) {
    for (std::size_t t = 0; t + 1 < chain.size(); ++t) {
        if (!chain[t].contains(chain[t + 1]))
            throw std::runtime_error(std::string(tag) + ": chain inclusion fails below degree " +
                                     std::to_string(factor_degrees[t]));
        if (chain[t + 1].dim() >= chain[t].dim())
            throw std::runtime_error(std::string(tag) + ": chain not strictly decreasing below degree " +
                                     std::to_string(factor_degrees[t]));
    }
}

} // namespace

void build_chains(TensorDecomposition& d) {
    const std::uint64_t p = d.p;

    // sym: i = 2,4,...,p-1; the cyclic submodules themselves form the chain
    // and spin(v_2) is all of As+.
    build_generators(d.AsPlus, 2, p, d.sym_generators, d.sym_degrees,
                     d.sym_cyclic, "As+");
    if (d.sym_cyclic.front().dim() != d.AsPlus.dim)
        throw std::runtime_error("As+: spin(v_2) is not the whole module");
    d.sym_chain = d.sym_cyclic;
    d.sym_chain.push_back(Subspace::zero(d.AsPlus.dim, p));
    d.sym_factor_degrees = d.sym_degrees;
    assert_strictly_decreasing(d.sym_chain, d.sym_factor_degrees, "As+");

    // alt: j = 3,5,...,p. Here spin(v_3) has codimension 1: the degree-p
    // generator v_p spans an invariant line complementing it, so the chain
    // starts with the whole module and the top factor is the trivial one.
    build_generators(d.AaPlus, 3, p, d.alt_generators, d.alt_degrees,
                     d.alt_cyclic, "Aa+");
    const Subspace& block = d.alt_cyclic.front();
    const Subspace& line = d.alt_cyclic.back();
    if (block.dim() != d.AaPlus.dim - 1)
        throw std::runtime_error("Aa+: spin(v_3) does not have codimension 1");
    if (line.dim() != 1)
        throw std::runtime_error("Aa+: spin(v_p) is not a line");
    if (subspace_intersect(block, line).dim() != 0 ||
        subspace_sum(block, line).dim() != d.AaPlus.dim)
        throw std::runtime_error("Aa+: spin(v_3) and k.v_p do not split the module");
    d.alt_chain.push_back(Subspace::full(d.AaPlus.dim, p));
    for (std::size_t t = 0; t + 1 < d.alt_cyclic.size(); ++t)
        d.alt_chain.push_back(d.alt_cyclic[t]);
    d.alt_chain.push_back(Subspace::zero(d.AaPlus.dim, p));
    d.alt_factor_degrees.push_back(static_cast<int>(p)); // Aa+/spin(v_3) = L^-(0)
    for (std::size_t t = 0; t + 1 < d.alt_degrees.size(); ++t)
        d.alt_factor_degrees.push_back(d.alt_degrees[t]);
    assert_strictly_decreasing(d.alt_chain, d.alt_factor_degrees, "Aa+");
}

namespace {

CompositionReport chain_report(const GradedGModule& top,
                               const std::vector<Subspace>& chain,
                               const std::vector<int>& degrees, std::uint64_t p,
                               std::vector<std::string>& failures,
                               const char* tag) {
    CompositionReport rep;
    rep.module_dim = top.dim;
    rep.chain.push_back(top.dim);
    rep.grothendieck.assign(p, 0);
    for (std::size_t t = 0; t + 1 < chain.size(); ++t) {
        GradedGModule sub = restrict_module(top, chain[t]);
        GradedGModule factor =
            chain[t + 1].dim() == 0
                ? sub
                : quotient_module(sub, coordinates_in(chain[t], chain[t + 1]));
        if (!is_simple(factor)) {
            failures.push_back(std::string(tag) + ": chain quotient at degree " +
                               std::to_string(degrees[t]) + " is not simple");
            continue;
        }
        SimpleLabel got = identify_simple(factor);
        FpScalar want_mu = static_cast<FpScalar>(degrees[t]) % p;
        if (got.lowest_weight != want_mu)
            failures.push_back(std::string(tag) + ": factor at degree " +
                               std::to_string(degrees[t]) + " has lowest weight " +
                               std::to_string(got.lowest_weight) + ", expected " +
                               std::to_string(want_mu));
        rep.factors.push_back(got);
        rep.chain.push_back(chain[t + 1].dim());
        ++rep.grothendieck[got.lambda];
    }
    return rep;
}

} // namespace

MainTheoremResult verify_main_theorem(const TensorDecomposition& d) {
    MainTheoremResult r;
    r.sym_chain_report = chain_report(d.AsPlus, d.sym_chain, d.sym_factor_degrees,
                                      d.p, r.failures, "As+");
    r.alt_chain_report = chain_report(d.AaPlus, d.alt_chain, d.alt_factor_degrees,
                                      d.p, r.failures, "Aa+");

    r.sym_socle_simple = is_indecomposable_via_socle(d.AsPlus);
    if (!r.sym_socle_simple) r.failures.push_back("As+: socle is not simple");

    // Aa+ decomposes: socle = spin(v_{p-2}) (+) k.v_p, exactly two minimal
    // submodules, and the block spin(v_3) is indecomposable.
    const Subspace& block = d.alt_cyclic.front();
    const Subspace& line = d.alt_cyclic.back();
    std::vector<Subspace> mins = minimal_submodules(d.AaPlus);
    r.alt_splits =
        mins.size() == 2 &&
        subspace_intersect(block, line).dim() == 0 &&
        subspace_sum(block, line).dim() == d.AaPlus.dim &&
        socle(d.AaPlus) == subspace_sum(d.alt_cyclic[d.alt_cyclic.size() - 2], line);
    if (!r.alt_splits)
        r.failures.push_back("Aa+: socle is not spin(v_{p-2}) (+) k.v_p");
    r.alt_block_socle_simple =
        is_indecomposable_via_socle(restrict_module(d.AaPlus, block));
    if (!r.alt_block_socle_simple)
        r.failures.push_back("Aa+: the block spin(v_3) has non-simple socle");

    r.sym_oracle = composition_series(d.AsPlus);
    r.alt_oracle = composition_series(d.AaPlus);
    if (r.sym_oracle.grothendieck != r.sym_chain_report.grothendieck)
        r.failures.push_back("As+: oracle factor multiset differs from chain");
    if (r.alt_oracle.grothendieck != r.alt_chain_report.grothendieck)
        r.failures.push_back("Aa+: oracle factor multiset differs from chain");
    return r;
}

GrothendieckResult grothendieck_checks(const TensorDecomposition& d) {
    const std::uint64_t p = d.p;
    GrothendieckResult r;

    auto add = [&](std::vector<std::size_t>& acc, const std::vector<std::size_t>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) acc[i] += v[i];
    };
    r.a2_assembled.assign(p, 0);
    add(r.a2_assembled,
        composition_series(restrict_module(d.A2, d.As_prime)).grothendieck);
    add(r.a2_assembled, composition_series(d.AsPlus).grothendieck);
    add(r.a2_assembled,
        composition_series(restrict_module(d.A2, d.Aa_prime)).grothendieck);
    add(r.a2_assembled, composition_series(d.AaPlus).grothendieck);

    r.a2_direct = composition_series(d.A2).grothendieck;

    r.a2_expected.assign(p, 1);
    r.a2_expected[0] = 2;
    r.a2_expected[p - 1] = 2;

    if (r.a2_assembled != r.a2_expected)
        r.failures.push_back("[A]: assembled factors differ from the identity");
    if (r.a2_direct != r.a2_expected)
        r.failures.push_back("[A]: direct oracle factors differ from the identity");

    GradedGModule lmod = simple_module(p, p - 1).first;
    GradedGModule lxl = tensor_product(lmod, lmod);
    r.lxl_direct = composition_series(lxl).grothendieck;
    r.lxl_expected.assign(p, 1);
    r.lxl_expected[p - 1] = 0;
    if (r.lxl_direct != r.lxl_expected)
        r.failures.push_back("[L(p-1) (x) L(p-1)]: factors differ from the identity");
    return r;
}

TensorDecomposition build_pipeline(std::uint64_t p) {
    TensorDecomposition d = s2_split(p);
    canonical_submodules(d);
    build_chains(d);
    return d;
}

std::vector<std::string> injectivity_failures(const GradedGModule& a2) {
    const std::uint64_t p = a2.p;
    std::vector<std::string> failures;
    for (int s = 1; s <= 2; ++s)
        for (int n = 1; n + s < static_cast<int>(p); ++n) {
            Subspace comp = degree_component(a2, n);
            std::vector<std::vector<FpScalar>> images;
            for (std::size_t r = 0; r < comp.dim(); ++r)
                images.push_back(a2.act(s).apply(comp.basis().row(r)));
            std::size_t rank =
                Subspace::from_vectors(images, a2.dim, p).dim();
            if (rank != comp.dim())
                failures.push_back("rho(e_" + std::to_string(s) +
                                   ") not injective on degree " +
                                   std::to_string(n));
        }
    return failures;
}

namespace {

void surjectivity_for(const GradedGModule& top,
                      const std::vector<std::vector<FpScalar>>& generators,
                      const std::vector<int>& degrees,
                      const std::vector<Subspace>& cyclic, std::uint64_t p,
                      std::vector<std::string>& failures, const char* tag) {
    for (std::size_t t = 0; t < generators.size(); ++t) {
        int i = degrees[t];
        if (static_cast<FpScalar>(i) % p == 0) continue; // lowest weight 0
        const Subspace& v = cyclic[t];
        for (int l = 0; l + 2 < static_cast<int>(p); ++l) {
            Subspace target = graded_piece(top, v, l + i);
            Subspace source = graded_piece(top, v, l + i + 1);
            std::vector<std::vector<FpScalar>> images;
            for (std::size_t r = 0; r < source.dim(); ++r)
                images.push_back(top.act(-1).apply(source.basis().row(r)));
            Subspace image = Subspace::from_vectors(images, top.dim, p);
            if (image != target)
                failures.push_back(std::string(tag) + ": e_-1 image of V_" +
                                   std::to_string(l + i + 1) +
                                   " is not V_" + std::to_string(l + i) +
                                   " (generator degree " + std::to_string(i) + ")");
        }
    }
}

} // namespace

std::vector<std::string> surjectivity_failures(const TensorDecomposition& d) {
    std::vector<std::string> failures;
    surjectivity_for(d.AsPlus, d.sym_generators, d.sym_degrees, d.sym_cyclic,
                     d.p, failures, "As+");
    surjectivity_for(d.AaPlus, d.alt_generators, d.alt_degrees, d.alt_cyclic,
                     d.p, failures, "Aa+");
    return failures;
}

namespace {

void graded_dims_for(const GradedGModule& top,
                     const std::vector<std::vector<FpScalar>>& generators,
                     const std::vector<int>& degrees, std::uint64_t p,
                     bool alternating, std::vector<std::string>& failures,
                     const char* tag) {
    for (std::size_t t = 0; t < generators.size(); ++t) {
        int i = degrees[t];
        std::map<int, std::size_t> dims = graded_bplus_spin_dims(top, generators[t]);
        for (int l = 0; l + i <= static_cast<int>(p); ++l) {
            std::size_t want = static_cast<std::size_t>(l / 2) + 1;
            // alternating boundary: at l+i = p the new kernel line v_p lies
            // outside spin(v_{i,a}), so the dimension stalls (except for v_p
            // itself at l = 0, which is its own 1-dimensional start)
            if (alternating && l + i == static_cast<int>(p) && l > 0)
                want = static_cast<std::size_t>(l / 2);
            std::size_t got = dims.count(i + l) ? dims[i + l] : 0;
            if (got != want)
                failures.push_back(std::string(tag) + ": dim u(b+)_" +
                                   std::to_string(l) + ".v_" + std::to_string(i) +
                                   " = " + std::to_string(got) + ", expected " +
                                   std::to_string(want));
        }
    }
}

} // namespace

std::vector<std::string> graded_dim_failures(const TensorDecomposition& d) {
    std::vector<std::string> failures;
    graded_dims_for(d.AsPlus, d.sym_generators, d.sym_degrees, d.p, false,
                    failures, "As+");
    graded_dims_for(d.AaPlus, d.alt_generators, d.alt_degrees, d.p, true,
                    failures, "Aa+");
    return failures;
}

std::vector<std::string> p5_degree6_failures(const TensorDecomposition& d) {
    std::vector<std::string> failures;
    if (d.p != 5) return failures;
    const std::uint64_t p = 5;
    Subspace comp6 = degree_component(d.AsPlus, 6);
    if (comp6.dim() != 2)
        failures.push_back("(As+)_6 has dimension " + std::to_string(comp6.dim()) +
                           ", expected 2");
    auto [q, section] = quotient_map(d.AsMod.dim, d.As_prime_in_As);
    auto project = [&](const std::vector<FpScalar>& v_in_a2) {
        return q.apply(d.As.coordinates(v_in_a2));
    };
    std::vector<FpScalar> m1(p * p, 0), m2(p * p, 0);
    m1[3 * p + 3] = 1;            // x1^3 x2^3
    m2[4 * p + 2] = 1;            // x1^4 x2^2
    m2[2 * p + 4] = 1;            // + x1^2 x2^4
    Subspace span = Subspace::from_vectors({project(m1), project(m2)},
                                           d.AsPlus.dim, p);
    if (span != comp6)
        failures.push_back("(As+)_6 is not spanned by x1^3x2^3 and x1^4x2^2+x1^2x2^4");
    return failures;
}

} // namespace wittrep
