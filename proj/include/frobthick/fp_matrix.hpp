/*
 * Copyright 2026 The frobthick Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FROBTHICK_FP_MATRIX_HPP
#define FROBTHICK_FP_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "errors.hpp"
#include "prime_field.hpp"

namespace frobthick {

/// Dense row-major matrix over F_p. Entries are always fully reduced.
class FpMatrix {
   public:
    FpMatrix(PrimeModulus modulus, std::size_t rows, std::size_t cols)
        : modulus_(modulus), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    FpMatrix(PrimeModulus modulus, std::size_t rows, std::size_t cols, std::span<const std::int64_t> entries)
        : FpMatrix(modulus, rows, cols) {
        if (entries.size() != rows * cols) throw ShapeError("entry count does not match matrix shape");
        for (std::size_t i = 0; i < entries.size(); ++i) data_[i] = modulus.reduce(entries[i]);
    }

    static FpMatrix identity(PrimeModulus modulus, std::size_t n) {
        FpMatrix m(modulus, n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const PrimeModulus& modulus() const noexcept { return modulus_; }

    std::uint32_t operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::int64_t v) noexcept { data_[r * cols_ + c] = modulus_.reduce(v); }
    void add_to(std::size_t r, std::size_t c, std::uint32_t v) noexcept {
        auto& x = data_[r * cols_ + c];
        x = modulus_.add(x, v);
    }

    std::span<const std::uint32_t> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<std::uint32_t> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }

    std::vector<std::uint32_t> column(std::size_t c) const {
        std::vector<std::uint32_t> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    bool is_zero() const noexcept {
        for (auto v : data_)
            if (v) return false;
        return true;
    }

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

   private:
    PrimeModulus modulus_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

inline FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols() != b.rows() || !(a.modulus() == b.modulus())) throw ShapeError("matrix product shape mismatch");
    const auto& mod = a.modulus();
    FpMatrix out(mod, a.rows(), b.cols());
    std::vector<std::uint64_t> acc(b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            std::uint64_t aik = a(i, k);
            if (!aik) continue;
            auto brow = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) acc[j] = (acc[j] + aik * brow[j]) % mod.value();
        }
        for (std::size_t j = 0; j < b.cols(); ++j) out.set(i, j, static_cast<std::int64_t>(acc[j]));
    }
    return out;
}

inline std::vector<std::uint32_t> operator*(const FpMatrix& a, std::span<const std::uint32_t> v) {
    if (a.cols() != v.size()) throw ShapeError("matrix-vector shape mismatch");
    std::vector<std::uint32_t> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < a.cols(); ++k) acc = (acc + std::uint64_t{a(i, k)} * v[k]) % a.modulus().value();
        out[i] = static_cast<std::uint32_t>(acc);
    }
    return out;
}

struct RrefResult {
    std::size_t rank = 0;
    FpMatrix reduced;                  ///< reduced row echelon form of the input
    std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row of `reduced`
    FpMatrix kernel_basis;             ///< cols x (cols - rank); columns span the null space
};

/// Gauss-Jordan elimination with first-nonzero pivoting.
inline RrefResult rref(const FpMatrix& m) {
    const auto& mod = m.modulus();
    FpMatrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < r.cols() && lead < r.rows(); ++c) {
        std::size_t piv = lead;
        while (piv < r.rows() && r(piv, c) == 0) ++piv;
        if (piv == r.rows()) continue;
        if (piv != lead) {
            auto a = r.row(piv), b = r.row(lead);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        auto inv = mod.inv(r(lead, c));
        for (auto& x : r.row(lead)) x = mod.mul(x, inv);
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r(i, c) == 0) continue;
            auto factor = mod.neg(r(i, c));
            auto src = r.row(lead);
            auto dst = r.row(i);
            for (std::size_t j = c; j < r.cols(); ++j) dst[j] = mod.add(dst[j], mod.mul(factor, src[j]));
        }
        pivots.push_back(c);
        ++lead;
    }

    const std::size_t rank = pivots.size();
    FpMatrix kernel(mod, m.cols(), m.cols() - rank);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t k = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        kernel.set(free, k, 1);
        for (std::size_t i = 0; i < rank; ++i) kernel.set(pivots[i], k, mod.neg(r(i, free)));
        ++k;
    }
    return RrefResult{rank, std::move(r), std::move(pivots), std::move(kernel)};
}

inline std::size_t rank(const FpMatrix& m) { return rref(m).rank; }

/// Incrementally grown echelon basis of a subspace of F_p^dim.
///
/// Used where spanning vectors are generated on the fly and most of them are
/// dependent: each insertion reduces against the stored pivot rows using 64-bit
/// accumulators, so the inner loop needs a modular reduction only every few
/// million updates for small primes.
class RowEchelon {
   public:
    RowEchelon(PrimeModulus modulus, std::size_t dim)
        : modulus_(modulus), dim_(dim), pivot_row_(dim, -1), work_(dim) {
        const std::uint64_t pm1 = modulus.value() - 1;
        const std::uint64_t step = pm1 * pm1 == 0 ? 1 : pm1 * pm1;
        budget_ = (std::numeric_limits<std::uint64_t>::max() - modulus.value()) / step - 1;
    }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    bool full() const noexcept { return rows_.size() == dim_; }

    /// Adds v to the basis if it is independent; returns whether it was.
    bool insert(std::span<const std::uint32_t> v) {
        if (v.size() != dim_) throw ShapeError("vector length does not match echelon dimension");
        if (full()) return false;
        auto lead = reduce(v);
        if (lead == dim_) return false;
        const auto& mod = modulus_;
        std::vector<std::uint32_t> row(dim_);
        auto inv = mod.inv(static_cast<std::uint32_t>(work_[lead]));
        for (std::size_t j = lead; j < dim_; ++j) row[j] = mod.mul(static_cast<std::uint32_t>(work_[j]), inv);
        pivot_row_[lead] = static_cast<std::int64_t>(rows_.size());
        rows_.push_back(std::move(row));
        return true;
    }

    /// Whether v lies in the span of the inserted vectors.
    bool contains(std::span<const std::uint32_t> v) {
        if (v.size() != dim_) throw ShapeError("vector length does not match echelon dimension");
        return reduce(v) == dim_;
    }

   private:
    // Reduces v into work_ (fully reduced afterwards); returns the first nonzero
    // position that has no pivot, or dim_ when v reduces to zero.
    std::size_t reduce(std::span<const std::uint32_t> v) {
        const std::uint64_t p = modulus_.value();
        for (std::size_t j = 0; j < dim_; ++j) work_[j] = v[j];
        std::uint64_t used = 0;
        std::size_t lead = dim_;
        for (std::size_t i = 0; i < dim_; ++i) {
            std::uint64_t c = work_[i] % p;
            work_[i] = c;
            if (c == 0) continue;
            auto r = pivot_row_[i];
            if (r < 0) {
                if (lead == dim_) lead = i;
                continue;
            }
            if (++used >= budget_) {
                for (std::size_t j = i + 1; j < dim_; ++j) work_[j] %= p;
                used = 1;
            }
            const std::uint64_t factor = p - c;
            const auto& row = rows_[static_cast<std::size_t>(r)];
            work_[i] = 0;
            for (std::size_t j = i + 1; j < dim_; ++j) work_[j] += factor * row[j];
        }
        return lead;
    }

    PrimeModulus modulus_;
    std::size_t dim_;
    std::vector<std::int64_t> pivot_row_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::uint64_t> work_;
    std::uint64_t budget_;
};

}  // namespace frobthick

#endif
