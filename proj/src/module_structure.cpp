#include "wittrep/structure.hpp"

#include <algorithm>
#include <random>

namespace wittrep {

namespace {

Subspace spin_with(const GradedGModule& m,
                   const std::vector<std::vector<FpScalar>>& generators,
                   const std::vector<int>& op_indices) {
    Subspace s = Subspace::from_vectors(generators, m.dim, m.p);
    for (;;) {
        std::size_t before = s.dim();
        std::vector<std::vector<FpScalar>> rows;
        for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(s.basis().row(r));
        for (int i : op_indices)
            for (const auto& v : rows) {
                std::vector<FpScalar> w = m.act(i).apply(v);
                if (!s.contains(w)) {
                    std::vector<std::vector<FpScalar>> all;
                    for (std::size_t r = 0; r < s.dim(); ++r)
                        all.push_back(s.basis().row(r));
                    all.push_back(std::move(w));
                    s = Subspace::from_vectors(all, m.dim, m.p);
                }
            }
        if (s.dim() == before) return s;
    }
}

} // namespace

Subspace spin(const GradedGModule& m,
              const std::vector<std::vector<FpScalar>>& generators) {
    std::vector<int> ops;
    for (int i = -1; i <= m.max_index(); ++i) ops.push_back(i);
    return spin_with(m, generators, ops);
}

Subspace spin_bplus(const GradedGModule& m,
                    const std::vector<std::vector<FpScalar>>& generators) {
    std::vector<int> ops;
    for (int i = 0; i <= m.max_index(); ++i) ops.push_back(i);
    return spin_with(m, generators, ops);
}

Subspace degree_component(const GradedGModule& m, int degree) {
    if (!m.degrees)
        throw std::invalid_argument("degree_component: module has no degrees");
    std::vector<std::vector<FpScalar>> vecs;
    for (std::size_t c = 0; c < m.dim; ++c)
        if ((*m.degrees)[c] == degree) {
            std::vector<FpScalar> v(m.dim, 0);
            v[c] = 1;
            vecs.push_back(std::move(v));
        }
    return Subspace::from_vectors(vecs, m.dim, m.p);
}

Subspace graded_piece(const GradedGModule& m, const Subspace& s, int degree) {
    return subspace_intersect(s, degree_component(m, degree));
}

std::map<int, Subspace> lowest_weight_vectors_by_degree(const GradedGModule& m) {
    if (!m.degrees)
        throw std::invalid_argument("lowest_weight_vectors_by_degree: no degrees");
    Subspace ker_em1 = kernel(m.act(-1));
    std::map<int, Subspace> out;
    int lo = *std::min_element(m.degrees->begin(), m.degrees->end());
    int hi = *std::max_element(m.degrees->begin(), m.degrees->end());
    for (int d = lo; d <= hi; ++d) {
        Subspace piece = subspace_intersect(ker_em1, degree_component(m, d));
        if (piece.dim() > 0) out.emplace(d, std::move(piece));
    }
    return out;
}

std::map<FpScalar, Subspace> lowest_weight_vectors_by_weight(const GradedGModule& m) {
    Subspace ker_em1 = kernel(m.act(-1));
    std::vector<Subspace> weights = weight_decomposition(m);
    std::map<FpScalar, Subspace> out;
    for (FpScalar lam = 0; lam < m.p; ++lam) {
        Subspace piece = subspace_intersect(ker_em1, weights[lam]);
        if (piece.dim() > 0) out.emplace(lam, std::move(piece));
    }
    return out;
}

std::map<int, std::size_t> graded_bplus_spin_dims(const GradedGModule& m,
                                                  const std::vector<FpScalar>& v) {
    if (!m.degrees)
        throw std::invalid_argument("graded_bplus_spin_dims: module has no degrees");
    std::optional<int> vdeg;
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (v[c] == 0) continue;
        int d = (*m.degrees)[c];
        if (vdeg && *vdeg != d)
            throw std::invalid_argument("graded_bplus_spin_dims: v not homogeneous");
        vdeg = d;
    }
    if (!vdeg)
        throw std::invalid_argument("graded_bplus_spin_dims: v is zero");
    Subspace span = spin_bplus(m, {v});
    std::map<int, std::size_t> dims;
    int hi = *std::max_element(m.degrees->begin(), m.degrees->end());
    for (int d = *vdeg; d <= hi; ++d) {
        std::size_t k = graded_piece(m, span, d).dim();
        if (k > 0) dims[d] = k;
    }
    return dims;
}

std::vector<Subspace> minimal_submodules(const GradedGModule& m, std::size_t enum_cap) {
    if (m.dim == 0) return {};
    const std::uint64_t p = m.p;
    std::vector<Subspace> candidates;
    // Every nonzero submodule contains an e_0-weight vector killed by e_{-1}
    // (e_{-1} acts nilpotently, e_0 semisimply), so this search is complete.
    for (auto& [lam, w] : lowest_weight_vectors_by_weight(m)) {
        (void)lam;
        if (w.dim() == 1) {
            candidates.push_back(spin(m, {w.basis().row(0)}));
            continue;
        }
        if (w.dim() > enum_cap)
            throw std::runtime_error(
                "minimal_submodules: enumeration budget exceeded (weight "
                "component of dimension " + std::to_string(w.dim()) + ")");
        // All projective representatives: first nonzero coefficient
        // normalized to 1, the later ones running over all of F_p.
        std::size_t d = w.dim();
        for (std::size_t lead = 0; lead < d; ++lead) {
            std::size_t free_count = d - lead - 1;
            std::vector<FpScalar> free_c(free_count, 0);
            for (;;) {
                std::vector<FpScalar> v = w.basis().row(lead);
                for (std::size_t j = 0; j < free_count; ++j) {
                    if (free_c[j] == 0) continue;
                    for (std::size_t c = 0; c < m.dim; ++c)
                        v[c] = (v[c] + free_c[j] * w.basis().at(lead + 1 + j, c)) % p;
                }
                candidates.push_back(spin(m, {v}));
                std::size_t k = 0;
                while (k < free_count) {
                    if (++free_c[k] < p) break;
                    free_c[k] = 0;
                    ++k;
                }
                if (k == free_count) break;
            }
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Subspace& a, const Subspace& b) { return a.lex_less(b); });
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    std::vector<Subspace> minimal;
    for (const Subspace& c : candidates) {
        bool has_smaller = false;
        for (const Subspace& o : candidates)
            if (o.dim() < c.dim() && c.contains(o)) {
                has_smaller = true;
                break;
            }
        if (!has_smaller) minimal.push_back(c);
    }
    return minimal;
}

Subspace socle(const GradedGModule& m, std::size_t enum_cap) {
    Subspace s = Subspace::zero(m.dim, m.p);
    for (const Subspace& sub : minimal_submodules(m, enum_cap))
        s = subspace_sum(s, sub);
    return s;
}

bool is_simple(const GradedGModule& m, std::size_t enum_cap) {
    if (m.dim == 0) return false;
    std::vector<Subspace> mins = minimal_submodules(m, enum_cap);
    return mins.size() == 1 && mins.front().dim() == m.dim;
}

bool is_indecomposable_via_socle(const GradedGModule& m, std::size_t enum_cap) {
    if (m.dim == 0) return false;
    return minimal_submodules(m, enum_cap).size() == 1;
}

CompositionReport composition_series(const GradedGModule& m,
                                     std::optional<std::uint64_t> shuffle_seed,
                                     std::size_t enum_cap) {
    CompositionReport rep;
    rep.module_dim = m.dim;
    std::optional<std::mt19937_64> rng;
    if (shuffle_seed) rng.emplace(*shuffle_seed);

    std::vector<SimpleLabel> bottom_up;
    GradedGModule q = m;
    while (q.dim > 0) {
        std::vector<Subspace> mins = minimal_submodules(q, enum_cap);
        if (rng) std::shuffle(mins.begin(), mins.end(), *rng);
        const Subspace& s = mins.front();
        GradedGModule sub = restrict_module(q, s);
        bottom_up.push_back(identify_simple(sub));
        q = quotient_module(q, s);
    }

    rep.chain.push_back(m.dim);
    for (auto it = bottom_up.rbegin(); it != bottom_up.rend(); ++it) {
        rep.factors.push_back(*it);
        rep.chain.push_back(rep.chain.back() - it->dim);
    }
    rep.grothendieck.assign(m.p, 0);
    for (const SimpleLabel& f : rep.factors) ++rep.grothendieck[f.lambda];
    return rep;
}

std::vector<std::size_t> grothendieck_vector(const CompositionReport& r, std::uint64_t p) {
    std::vector<std::size_t> g(p, 0);
    for (const SimpleLabel& f : r.factors) ++g[f.lambda];
    return g;
}

} // namespace wittrep
