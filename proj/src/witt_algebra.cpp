#include "wittrep/witt_algebra.hpp"

#include "wittrep/matrix.hpp"

namespace wittrep {

BracketTerm WittAlgebra::bracket(int i, int j) const {
    if (!index_in_range(i) || !index_in_range(j))
        throw std::out_of_range("bracket: basis index out of range");
    int sum = i + j;
    if (sum < -1 || sum > max_index()) return {0, std::nullopt};
    FpScalar c = fp_from_int(j - i, p_);
    if (c == 0) return {0, std::nullopt};
    return {c, sum};
}

BracketTerm WittAlgebra::pmap(int i) const {
    if (!index_in_range(i))
        throw std::out_of_range("pmap: basis index out of range");
    if (i == 0) return {1, 0};
    return {0, std::nullopt};
}

namespace {

// ad(e_i) in the basis e_{-1},...,e_{p-2}; matrix index = basis index + 1.
FpMatrix ad_matrix(const WittAlgebra& g, int i) {
    const std::uint64_t p = g.p();
    FpMatrix m(p, p, p);
    for (int j = g.min_index(); j <= g.max_index(); ++j) {
        BracketTerm t = g.bracket(i, j);
        if (!t.is_zero())
            m.at(static_cast<std::size_t>(*t.index + 1),
                 static_cast<std::size_t>(j + 1)) = t.coeff;
    }
    return m;
}

} // namespace

std::vector<AxiomCheck> verify_structure(std::uint64_t p) {
    WittAlgebra g(p);
    std::vector<AxiomCheck> checks;

    AxiomCheck antisym{"antisymmetry", true, ""};
    for (int i = g.min_index(); i <= g.max_index(); ++i)
        for (int j = g.min_index(); j <= g.max_index(); ++j) {
            BracketTerm a = g.bracket(i, j);
            BracketTerm b = g.bracket(j, i);
            bool ok = a.is_zero() ? b.is_zero()
                                  : (!b.is_zero() && *a.index == *b.index &&
                                     fp_add(a.coeff, b.coeff, p) == 0);
            if (!ok) {
                antisym.passed = false;
                antisym.detail = "[e_" + std::to_string(i) + ",e_" +
                                 std::to_string(j) + "] not antisymmetric";
            }
        }
    checks.push_back(antisym);

    AxiomCheck jacobi{"jacobi", true, ""};
    auto bracket_vec = [&](int i, const std::vector<FpScalar>& v) {
        // bracket of e_i against a vector in the e-basis
        std::vector<FpScalar> out(p, 0);
        for (int j = g.min_index(); j <= g.max_index(); ++j) {
            FpScalar c = v[static_cast<std::size_t>(j + 1)];
            if (c == 0) continue;
            BracketTerm t = g.bracket(i, j);
            if (!t.is_zero()) {
                auto& slot = out[static_cast<std::size_t>(*t.index + 1)];
                slot = fp_add(slot, fp_mul(c, t.coeff, p), p);
            }
        }
        return out;
    };
    auto basis_vec = [&](int i) {
        std::vector<FpScalar> v(p, 0);
        v[static_cast<std::size_t>(i + 1)] = 1;
        return v;
    };
    for (int i = g.min_index(); i <= g.max_index(); ++i)
        for (int j = g.min_index(); j <= g.max_index(); ++j)
            for (int k = g.min_index(); k <= g.max_index(); ++k) {
                std::vector<FpScalar> s(p, 0);
                auto acc = [&](int a, int b, int c) {
                    auto inner = bracket_vec(b, basis_vec(c));
                    auto outer = bracket_vec(a, inner);
                    for (std::size_t t = 0; t < p; ++t)
                        s[t] = fp_add(s[t], outer[t], p);
                };
                acc(i, j, k);
                acc(j, k, i);
                acc(k, i, j);
                for (FpScalar e : s)
                    if (e != 0) {
                        jacobi.passed = false;
                        jacobi.detail = "Jacobi fails at (" + std::to_string(i) +
                                        "," + std::to_string(j) + "," +
                                        std::to_string(k) + ")";
                    }
            }
    checks.push_back(jacobi);

    AxiomCheck restr{"restrictedness", true, ""};
    for (int i = g.min_index(); i <= g.max_index(); ++i) {
        FpMatrix lhs = ad_matrix(g, i).pow(p);
        BracketTerm pt = g.pmap(i);
        FpMatrix rhs = pt.is_zero() ? FpMatrix(p, p, p)
                                    : ad_matrix(g, *pt.index).scaled(pt.coeff);
        if (lhs != rhs) {
            restr.passed = false;
            restr.detail = "ad(e_" + std::to_string(i) + ")^p != ad(e_" +
                           std::to_string(i) + "^[p])";
        }
    }
    checks.push_back(restr);

    return checks;
}

} // namespace wittrep
