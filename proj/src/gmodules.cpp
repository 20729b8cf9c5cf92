#include "wittrep/gmodule.hpp"

#include <algorithm>

namespace wittrep {

std::size_t simple_dim(std::uint64_t p, FpScalar lambda) {
    if (lambda >= p) throw std::invalid_argument("lambda out of range");
    if (lambda == 0) return 1;
    if (lambda == p - 1) return p - 1;
    return p;
}

FpScalar lowest_weight_of(std::uint64_t p, FpScalar lambda) {
    if (lambda >= p) throw std::invalid_argument("lambda out of range");
    if (lambda == 0) return 0;
    if (lambda == p - 1) return 1;
    return lambda + 1;
}

FpScalar lambda_from_lowest_weight(std::uint64_t p, FpScalar mu) {
    if (mu >= p) throw std::invalid_argument("lowest weight out of range");
    if (mu == 0) return 0;
    if (mu == 1) return p - 1;
    return mu - 1;
}

SimpleLabel make_simple_label(std::uint64_t p, FpScalar lambda) {
    return {lambda, lowest_weight_of(p, lambda), simple_dim(p, lambda)};
}

std::vector<std::string> validate_module(const GradedGModule& m) {
    std::vector<std::string> violations;
    const std::uint64_t p = m.p;
    const int max_i = m.max_index();

    if (m.action.size() != p) {
        violations.push_back("expected " + std::to_string(p) + " action matrices");
        return violations;
    }
    for (const FpMatrix& a : m.action)
        if (a.rows() != m.dim || a.cols() != m.dim || a.modulus() != p) {
            violations.push_back("action matrix shape/modulus mismatch");
            return violations;
        }

    for (int i = -1; i <= max_i; ++i)
        for (int j = -1; j <= max_i; ++j) {
            FpMatrix lhs = m.act(i) * m.act(j) - m.act(j) * m.act(i);
            FpMatrix rhs(m.dim, m.dim, p);
            int sum = i + j;
            if (sum >= -1 && sum <= max_i)
                rhs = m.act(sum).scaled(fp_from_int(j - i, p));
            if (lhs != rhs)
                violations.push_back("Lie compatibility fails at (e_" +
                                     std::to_string(i) + ", e_" +
                                     std::to_string(j) + ")");
        }

    for (int i = -1; i <= max_i; ++i) {
        FpMatrix lhs = m.act(i).pow(p);
        FpMatrix rhs = (i == 0) ? m.act(0) : FpMatrix(m.dim, m.dim, p);
        if (lhs != rhs)
            violations.push_back("restrictedness fails at e_" + std::to_string(i));
    }

    if (m.degrees) {
        const auto& deg = *m.degrees;
        if (deg.size() != m.dim) {
            violations.push_back("degree vector length mismatch");
        } else {
            for (int i = -1; i <= max_i; ++i)
                for (std::size_t r = 0; r < m.dim; ++r)
                    for (std::size_t c = 0; c < m.dim; ++c)
                        if (m.act(i).at(r, c) != 0 && deg[r] != deg[c] + i)
                            violations.push_back(
                                "graded compatibility fails: e_" + std::to_string(i) +
                                " entry (" + std::to_string(r) + "," +
                                std::to_string(c) + ")");
        }
    }
    return violations;
}

GradedGModule make_module(std::uint64_t p, std::vector<FpMatrix> action,
                          std::optional<std::vector<int>> degrees,
                          std::optional<std::vector<std::string>> names) {
    require_valid_prime(p);
    GradedGModule m;
    m.p = p;
    m.dim = action.empty() ? 0 : action.front().rows();
    m.action = std::move(action);
    m.degrees = std::move(degrees);
    m.basis_names = std::move(names);
    std::vector<std::string> violations = validate_module(m);
    if (!violations.empty()) {
        std::string msg = "module validation failed:";
        for (const auto& v : violations) msg += "\n  " + v;
        throw std::runtime_error(msg);
    }
    return m;
}

GradedGModule natural_module(std::uint64_t p) {
    require_valid_prime(p);
    std::vector<FpMatrix> action;
    for (int k = -1; k <= static_cast<int>(p) - 2; ++k) {
        FpMatrix a(p, p, p);
        for (int j = 0; j < static_cast<int>(p); ++j) {
            int t = j + k;
            if (t >= 0 && t < static_cast<int>(p))
                a.at(static_cast<std::size_t>(t), static_cast<std::size_t>(j)) =
                    fp_from_int(j, p);
        }
        action.push_back(std::move(a));
    }
    std::vector<int> degrees(p);
    std::vector<std::string> names(p);
    for (std::size_t j = 0; j < p; ++j) {
        degrees[j] = static_cast<int>(j);
        names[j] = "x^" + std::to_string(j);
    }
    return make_module(p, std::move(action), degrees, names);
}

GradedGModule verma_module(std::uint64_t p, FpScalar lambda) {
    require_valid_prime(p);
    if (lambda >= p) throw std::invalid_argument("lambda out of range");
    std::vector<FpMatrix> action;
    for (int k = -1; k <= static_cast<int>(p) - 2; ++k) {
        FpMatrix a(p, p, p);
        for (int j = 0; j < static_cast<int>(p); ++j) {
            int t = j + k;
            if (t < 0 || t >= static_cast<int>(p)) continue;
            FpScalar coeff = fp_from_int(
                j + k + 1 + (k + 1) * static_cast<long long>(lambda), p);
            a.at(static_cast<std::size_t>(t), static_cast<std::size_t>(j)) = coeff;
        }
        action.push_back(std::move(a));
    }
    std::vector<int> degrees(p);
    std::vector<std::string> names(p);
    for (std::size_t j = 0; j < p; ++j) {
        degrees[j] = static_cast<int>(j);
        names[j] = "m_" + std::to_string(j);
    }
    return make_module(p, std::move(action), degrees, names);
}

std::pair<GradedGModule, SimpleLabel> simple_module(std::uint64_t p, FpScalar lambda) {
    require_valid_prime(p);
    if (lambda >= p) throw std::invalid_argument("lambda out of range");
    SimpleLabel label = make_simple_label(p, lambda);
    if (lambda == 0) {
        std::vector<FpMatrix> action(p, FpMatrix(1, 1, p));
        return {make_module(p, std::move(action), std::vector<int>{0}), label};
    }
    if (lambda == p - 1) {
        // Z(p-1) has the trivial submodule spanned by m_0.
        GradedGModule z = verma_module(p, p - 1);
        std::vector<FpScalar> m0(p, 0);
        m0[0] = 1;
        Subspace triv = Subspace::from_vectors({m0}, p, p);
        return {quotient_module(z, triv), label};
    }
    return {verma_module(p, lambda), label};
}

GradedGModule adjoint_module(std::uint64_t p) {
    WittAlgebra g(p);
    std::vector<FpMatrix> action;
    for (int i = -1; i <= g.max_index(); ++i) {
        FpMatrix a(p, p, p);
        for (int j = g.min_index(); j <= g.max_index(); ++j) {
            BracketTerm t = g.bracket(i, j);
            if (!t.is_zero())
                a.at(static_cast<std::size_t>(*t.index + 1),
                     static_cast<std::size_t>(j + 1)) = t.coeff;
        }
        action.push_back(std::move(a));
    }
    std::vector<int> degrees(p);
    std::vector<std::string> names(p);
    for (std::size_t t = 0; t < p; ++t) {
        degrees[t] = static_cast<int>(t) - 1;
        names[t] = "e_" + std::to_string(static_cast<int>(t) - 1);
    }
    return make_module(p, std::move(action), degrees, names);
}

GradedGModule tensor_product(const GradedGModule& a, const GradedGModule& b) {
    if (a.p != b.p) throw std::invalid_argument("tensor_product: modulus mismatch");
    const std::uint64_t p = a.p;
    FpMatrix ia = FpMatrix::identity(a.dim, p);
    FpMatrix ib = FpMatrix::identity(b.dim, p);
    std::vector<FpMatrix> action;
    for (int i = -1; i <= static_cast<int>(p) - 2; ++i)
        action.push_back(a.act(i).kronecker(ib) + ia.kronecker(b.act(i)));
    std::optional<std::vector<int>> degrees;
    if (a.degrees && b.degrees) {
        degrees.emplace();
        for (std::size_t r = 0; r < a.dim; ++r)
            for (std::size_t s = 0; s < b.dim; ++s)
                degrees->push_back((*a.degrees)[r] + (*b.degrees)[s]);
    }
    return make_module(p, std::move(action), std::move(degrees));
}

GradedGModule tensor_square_natural(std::uint64_t p) {
    require_valid_prime(p);
    const std::size_t n = p * p;
    const int pi = static_cast<int>(p);
    auto idx = [pi](int a1, int a2) {
        return static_cast<std::size_t>(a1 * pi + a2);
    };
    std::vector<FpMatrix> action;
    for (int k = -1; k <= pi - 2; ++k) {
        FpMatrix m(n, n, p);
        for (int a1 = 0; a1 < pi; ++a1)
            for (int a2 = 0; a2 < pi; ++a2) {
                // e_k . x1^a1 x2^a2 = a1 x1^(a1+k) x2^a2 + a2 x1^a1 x2^(a2+k)
                if (a1 + k >= 0 && a1 + k < pi) {
                    auto& slot = m.at(idx(a1 + k, a2), idx(a1, a2));
                    slot = fp_add(slot, fp_from_int(a1, p), p);
                }
                if (a2 + k >= 0 && a2 + k < pi) {
                    auto& slot = m.at(idx(a1, a2 + k), idx(a1, a2));
                    slot = fp_add(slot, fp_from_int(a2, p), p);
                }
            }
        action.push_back(std::move(m));
    }
    std::vector<int> degrees(n);
    std::vector<std::string> names(n);
    for (int a1 = 0; a1 < pi; ++a1)
        for (int a2 = 0; a2 < pi; ++a2) {
            degrees[idx(a1, a2)] = a1 + a2;
            names[idx(a1, a2)] =
                "x1^" + std::to_string(a1) + "*x2^" + std::to_string(a2);
        }
    GradedGModule m = make_module(p, std::move(action), degrees, names);

    // Cross-check against the Kronecker-sum construction.
    GradedGModule kron = tensor_product(natural_module(p), natural_module(p));
    for (int i = -1; i <= pi - 2; ++i)
        if (m.act(i) != kron.act(i))
            throw std::runtime_error(
                "tensor square: derivation formula disagrees with Kronecker sum at e_" +
                std::to_string(i));
    return m;
}

std::vector<Subspace> weight_decomposition(const GradedGModule& m) {
    const std::uint64_t p = m.p;
    std::vector<Subspace> spaces;
    std::size_t total = 0;
    for (FpScalar lambda = 0; lambda < p; ++lambda) {
        FpMatrix shifted = m.act(0) - FpMatrix::identity(m.dim, p).scaled(lambda);
        Subspace eig = kernel(shifted);
        total += eig.dim();
        spaces.push_back(std::move(eig));
    }
    if (total != m.dim)
        throw std::runtime_error("weight decomposition incomplete (" +
                                 std::to_string(total) + " of " +
                                 std::to_string(m.dim) + ")");
    return spaces;
}

bool is_invariant(const GradedGModule& m, const Subspace& s) {
    for (int i = -1; i <= m.max_index(); ++i)
        for (std::size_t r = 0; r < s.dim(); ++r)
            if (!s.contains(m.act(i).apply(s.basis().row(r))))
                return false;
    return true;
}

namespace {

// Degree of a basis row if homogeneous w.r.t. m's degrees, else nullopt.
std::optional<int> row_degree(const GradedGModule& m,
                              const std::vector<FpScalar>& v) {
    if (!m.degrees) return std::nullopt;
    std::optional<int> deg;
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (v[c] == 0) continue;
        int d = (*m.degrees)[c];
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

GradedGModule finish_module(std::uint64_t p, std::vector<FpMatrix> action,
                            std::optional<std::vector<int>> degrees) {
    // Degrees are only kept when the graded axiom actually holds (the
    // sub/quotient may not be graded).
    if (degrees) {
        try {
            return make_module(p, action, degrees);
        } catch (const std::runtime_error&) {
        }
    }
    return make_module(p, std::move(action));
}

} // namespace

GradedGModule quotient_module(const GradedGModule& m, const Subspace& s) {
    if (s.ambient_dim() != m.dim)
        throw std::invalid_argument("quotient_module: ambient dimension mismatch");
    if (!is_invariant(m, s))
        throw std::invalid_argument("quotient_module: subspace is not invariant");
    auto [q, section] = quotient_map(m.dim, s);
    std::vector<FpMatrix> action;
    for (int i = -1; i <= m.max_index(); ++i)
        action.push_back(q * m.act(i) * section);

    std::optional<std::vector<int>> degrees;
    if (m.degrees) {
        std::vector<bool> is_pivot(m.dim, false);
        for (std::size_t c : s.pivots()) is_pivot[c] = true;
        degrees.emplace();
        for (std::size_t c = 0; c < m.dim; ++c)
            if (!is_pivot[c]) degrees->push_back((*m.degrees)[c]);
    }
    return finish_module(m.p, std::move(action), std::move(degrees));
}

GradedGModule restrict_module(const GradedGModule& m, const Subspace& s) {
    if (s.ambient_dim() != m.dim)
        throw std::invalid_argument("restrict_module: ambient dimension mismatch");
    if (!is_invariant(m, s))
        throw std::invalid_argument("restrict_module: subspace is not invariant");
    const std::size_t d = s.dim();
    std::vector<FpMatrix> action;
    for (int i = -1; i <= m.max_index(); ++i) {
        FpMatrix a(d, d, m.p);
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<FpScalar> img = m.act(i).apply(s.basis().row(j));
            // RREF basis: coordinates are just the pivot-column values.
            for (std::size_t r = 0; r < d; ++r)
                a.at(r, j) = img[s.pivots()[r]];
        }
        action.push_back(std::move(a));
    }
    std::optional<std::vector<int>> degrees;
    if (m.degrees) {
        degrees.emplace();
        bool ok = true;
        for (std::size_t j = 0; j < d; ++j) {
            std::optional<int> dg = row_degree(m, s.basis().row(j));
            if (!dg && s.basis().row(j) != std::vector<FpScalar>(m.dim, 0)) {
                ok = false;
                break;
            }
            degrees->push_back(dg.value_or(0));
        }
        if (!ok) degrees.reset();
    }
    return finish_module(m.p, std::move(action), std::move(degrees));
}

SimpleLabel identify_simple(const GradedGModule& m) {
    const std::uint64_t p = m.p;
    if (m.dim == 0)
        throw std::invalid_argument("identify_simple: zero module");
    if (m.dim == 1) {
        for (int i = -1; i <= m.max_index(); ++i)
            if (!m.act(i).is_zero())
                throw std::runtime_error(
                    "identify_simple: 1-dimensional module with nonzero action");
        return make_simple_label(p, 0);
    }
    Subspace ker_em1 = kernel(m.act(-1));
    if (ker_em1.dim() != 1)
        throw std::runtime_error(
            "identify_simple: ker rho(e_-1) has dimension " +
            std::to_string(ker_em1.dim()) + ", expected 1 (input not simple?)");
    std::vector<FpScalar> v = ker_em1.basis().row(0);
    std::vector<FpScalar> w = m.act(0).apply(v);
    // w must be mu * v for some mu in F_p
    std::size_t lead = 0;
    while (lead < v.size() && v[lead] == 0) ++lead;
    FpScalar mu = fp_mul(w[lead], fp_inv(v[lead], p), p);
    for (std::size_t c = 0; c < v.size(); ++c)
        if (w[c] != fp_mul(mu, v[c], p))
            throw std::runtime_error(
                "identify_simple: lowest-weight vector is not an e_0 eigenvector");
    FpScalar lambda = lambda_from_lowest_weight(p, mu);
    SimpleLabel label = make_simple_label(p, lambda);
    if (label.dim != m.dim)
        throw std::runtime_error(
            "identify_simple: dimension " + std::to_string(m.dim) +
            " does not match L(" + std::to_string(lambda) + ")");
    return label;
}

} // namespace wittrep
