#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace scg {

/// Dense square-ish boolean matrix packed into 64-bit words, row-major.
/// Used for strict-order relations and graph adjacency at desk scale.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64),
          w_(static_cast<std::size_t>(rows) * wpr_, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int i, int j) const {
        return (w_[idx(i, j)] >> (j & 63)) & 1u;
    }
    void set(int i, int j, bool v = true) {
        if (v)
            w_[idx(i, j)] |= std::uint64_t{1} << (j & 63);
        else
            w_[idx(i, j)] &= ~(std::uint64_t{1} << (j & 63));
    }

    /// row(i) |= row(j); the workhorse of transitive closure.
    void or_row(int i, int j) {
        std::uint64_t* a = &w_[static_cast<std::size_t>(i) * wpr_];
        const std::uint64_t* b = &w_[static_cast<std::size_t>(j) * wpr_];
        for (int k = 0; k < wpr_; ++k) a[k] |= b[k];
    }

    const std::uint64_t* row(int i) const {
        return &w_[static_cast<std::size_t>(i) * wpr_];
    }
    int words_per_row() const { return wpr_; }

    int row_popcount(int i) const {
        const std::uint64_t* r = row(i);
        int c = 0;
        for (int k = 0; k < wpr_; ++k) c += std::popcount(r[k]);
        return c;
    }

    bool rows_intersect(int i, int j) const {
        const std::uint64_t* a = row(i);
        const std::uint64_t* b = row(j);
        for (int k = 0; k < wpr_; ++k)
            if (a[k] & b[k]) return true;
        return false;
    }

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_;
    }

    /// Calls f(j) for every set column in row i, ascending.
    template <typename F>
    void for_each_in_row(int i, F&& f) const {
        const std::uint64_t* r = row(i);
        for (int k = 0; k < wpr_; ++k) {
            std::uint64_t word = r[k];
            while (word) {
                int b = std::countr_zero(word);
                f(k * 64 + b);
                word &= word - 1;
            }
        }
    }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * wpr_ + (j >> 6);
    }
    int rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace scg
