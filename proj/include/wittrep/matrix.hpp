#pragma once

#include <cstddef>
#include <vector>

#include "wittrep/fp.hpp"

namespace wittrep {

/// Dense row-major matrix over F_p. Immutable by convention after being
/// built; all operations return new matrices.
class FpMatrix {
public:
    FpMatrix() = default;

    FpMatrix(std::size_t rows, std::size_t cols, std::uint64_t p)
        : rows_(rows), cols_(cols), p_(p), entries_(rows * cols, 0) {}

    static FpMatrix identity(std::size_t n, std::uint64_t p) {
        FpMatrix m(n, n, p);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static FpMatrix from_rows(const std::vector<std::vector<FpScalar>>& rows,
                              std::size_t cols, std::uint64_t p) {
        FpMatrix m(rows.size(), cols, p);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m.at(r, c) = rows[r][c] % p;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t modulus() const { return p_; }

    FpScalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    FpScalar at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::vector<FpScalar> row(std::size_t r) const {
        return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }

    bool is_zero() const {
        for (FpScalar e : entries_)
            if (e != 0) return false;
        return true;
    }

    FpMatrix operator+(const FpMatrix& o) const {
        check_same_shape(o);
        FpMatrix r = *this;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            r.entries_[i] = fp_add(entries_[i], o.entries_[i], p_);
        return r;
    }

    FpMatrix operator-(const FpMatrix& o) const {
        check_same_shape(o);
        FpMatrix r = *this;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            r.entries_[i] = fp_sub(entries_[i], o.entries_[i], p_);
        return r;
    }

    FpMatrix operator*(const FpMatrix& o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("matrix product shape mismatch");
        FpMatrix r(rows_, o.cols_, p_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                FpScalar a = at(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = (r.at(i, j) + a * o.at(k, j)) % p_;
            }
        return r;
    }

    FpMatrix scaled(FpScalar c) const {
        FpMatrix r = *this;
        for (auto& e : r.entries_) e = fp_mul(e, c, p_);
        return r;
    }

    std::vector<FpScalar> apply(const std::vector<FpScalar>& v) const {
        if (v.size() != cols_)
            throw std::invalid_argument("matrix-vector shape mismatch");
        std::vector<FpScalar> out(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < cols_; ++j)
                acc = (acc + at(i, j) * v[j]) % p_;
            out[i] = acc;
        }
        return out;
    }

    FpMatrix pow(std::uint64_t e) const {
        if (rows_ != cols_)
            throw std::invalid_argument("matrix power requires a square matrix");
        FpMatrix result = identity(rows_, p_);
        FpMatrix base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    FpMatrix transposed() const {
        FpMatrix r(cols_, rows_, p_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r.at(j, i) = at(i, j);
        return r;
    }

    /// Kronecker product, row-major index (a,b) -> a*o.rows + b.
    FpMatrix kronecker(const FpMatrix& o) const {
        FpMatrix r(rows_ * o.rows_, cols_ * o.cols_, p_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                FpScalar a = at(i, j);
                if (a == 0) continue;
                for (std::size_t k = 0; k < o.rows_; ++k)
                    for (std::size_t l = 0; l < o.cols_; ++l)
                        r.at(i * o.rows_ + k, j * o.cols_ + l) =
                            fp_mul(a, o.at(k, l), p_);
            }
        return r;
    }

    bool operator==(const FpMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ &&
               entries_ == o.entries_;
    }
    bool operator!=(const FpMatrix& o) const { return !(*this == o); }

private:
    void check_same_shape(const FpMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
            throw std::invalid_argument("matrix shape or modulus mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::uint64_t p_ = 2;
    std::vector<FpScalar> entries_;
};

struct RrefResult {
    FpMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form. Deterministic: leftmost pivot column,
/// topmost available row.
RrefResult rref(const FpMatrix& m);

} // namespace wittrep
