#include "wittrep/subspace.hpp"

#include <algorithm>

namespace wittrep {

RrefResult rref(const FpMatrix& m) {
    const std::uint64_t p = m.modulus();
    FpMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t c = 0; c < a.cols(); ++c)
                std::swap(a.at(sel, c), a.at(pivot_row, c));
        FpScalar inv = fp_inv(a.at(pivot_row, col), p);
        for (std::size_t c = col; c < a.cols(); ++c)
            a.at(pivot_row, c) = fp_mul(a.at(pivot_row, c), inv, p);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pivot_row) continue;
            FpScalar f = a.at(r, col);
            if (f == 0) continue;
            for (std::size_t c = col; c < a.cols(); ++c)
                a.at(r, c) = fp_sub(a.at(r, c), fp_mul(f, a.at(pivot_row, c), p), p);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return {std::move(a), pivots.size(), std::move(pivots)};
}

Subspace Subspace::from_matrix(const FpMatrix& m) {
    RrefResult r = rref(m);
    Subspace s;
    s.ambient_ = m.cols();
    s.pivots_ = r.pivots;
    FpMatrix basis(r.rank, m.cols(), m.modulus());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t c = 0; c < m.cols(); ++c)
            basis.at(i, c) = r.reduced.at(i, c);
    s.basis_ = std::move(basis);
    return s;
}

std::vector<FpScalar> Subspace::reduce(const std::vector<FpScalar>& v) const {
    if (v.size() != ambient_)
        throw std::invalid_argument("vector/ambient dimension mismatch");
    const std::uint64_t p = basis_.modulus();
    std::vector<FpScalar> w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        FpScalar f = w[pivots_[i]];
        if (f == 0) continue;
        for (std::size_t c = 0; c < ambient_; ++c)
            w[c] = fp_sub(w[c], fp_mul(f, basis_.at(i, c), p), p);
    }
    return w;
}

bool Subspace::contains(const std::vector<FpScalar>& v) const {
    std::vector<FpScalar> w = reduce(v);
    return std::all_of(w.begin(), w.end(), [](FpScalar x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

std::vector<FpScalar> Subspace::coordinates(const std::vector<FpScalar>& v) const {
    if (!contains(v))
        throw std::invalid_argument("vector not in subspace");
    std::vector<FpScalar> coords(dim());
    for (std::size_t i = 0; i < dim(); ++i) coords[i] = v[pivots_[i]];
    return coords;
}

bool Subspace::lex_less(const Subspace& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t c = 0; c < ambient_; ++c) {
            if (basis_.at(r, c) != o.basis_.at(r, c))
                return basis_.at(r, c) < o.basis_.at(r, c);
        }
    return false;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("subspace sum: ambient dimension mismatch");
    FpMatrix stacked(a.dim() + b.dim(), a.ambient_dim(), a.modulus());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.ambient_dim(); ++c)
            stacked.at(r, c) = a.basis().at(r, c);
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < b.ambient_dim(); ++c)
            stacked.at(a.dim() + r, c) = b.basis().at(r, c);
    return Subspace::from_matrix(stacked);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("subspace intersection: ambient dimension mismatch");
    const std::uint64_t p = a.modulus();
    const std::size_t n = a.ambient_dim();
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n, p);
    // v in a∩b iff v = u·A = w·B; solve [A^T | -B^T] x = 0 and read off u.
    FpMatrix sys(n, a.dim() + b.dim(), p);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < a.dim(); ++r)
            sys.at(c, r) = a.basis().at(r, c);
        for (std::size_t r = 0; r < b.dim(); ++r)
            sys.at(c, a.dim() + r) = fp_neg(b.basis().at(r, c), p);
    }
    Subspace ker = kernel(sys);
    std::vector<std::vector<FpScalar>> vecs;
    for (std::size_t i = 0; i < ker.dim(); ++i) {
        std::vector<FpScalar> coeffs = ker.basis().row(i);
        std::vector<FpScalar> v(n, 0);
        for (std::size_t r = 0; r < a.dim(); ++r)
            for (std::size_t c = 0; c < n; ++c)
                v[c] = (v[c] + coeffs[r] * a.basis().at(r, c)) % p;
        vecs.push_back(std::move(v));
    }
    return Subspace::from_vectors(vecs, n, p);
}

Subspace kernel(const FpMatrix& m) {
    const std::uint64_t p = m.modulus();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    std::vector<std::vector<FpScalar>> vecs;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<FpScalar> v(m.cols(), 0);
        v[c] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = fp_neg(r.reduced.at(i, c), p);
        vecs.push_back(std::move(v));
    }
    return Subspace::from_vectors(vecs, m.cols(), p);
}

std::pair<FpMatrix, FpMatrix> quotient_map(std::size_t ambient, const Subspace& s) {
    if (s.ambient_dim() != ambient)
        throw std::invalid_argument("quotient_map: ambient dimension mismatch");
    const std::uint64_t p = s.modulus();
    std::vector<bool> is_pivot(ambient, false);
    for (std::size_t c : s.pivots()) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < ambient; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    const std::size_t q_dim = free_cols.size();
    FpMatrix projection(q_dim, ambient, p);
    for (std::size_t r = 0; r < q_dim; ++r) {
        projection.at(r, free_cols[r]) = 1;
        for (std::size_t j = 0; j < s.dim(); ++j)
            projection.at(r, s.pivots()[j]) = fp_neg(s.basis().at(j, free_cols[r]), p);
    }
    FpMatrix section(ambient, q_dim, p);
    for (std::size_t r = 0; r < q_dim; ++r) section.at(free_cols[r], r) = 1;
    return {std::move(projection), std::move(section)};
}

} // namespace wittrep
