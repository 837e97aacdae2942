#pragma once

#include <cstdint>
#include <vector>

namespace arbor {

/// Dense matrix over the prime field F_p, entries stored reduced in [0, p).
class FpMatrix {
public:
    FpMatrix(int prime, int rows, int cols);

    static FpMatrix identity(int prime, int n);

    int prime() const { return prime_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, int value);

    std::vector<int>& entries() { return data_; }
    const std::vector<int>& entries() const { return data_; }

    /// this * rhs (apply rhs first).
    FpMatrix operator*(const FpMatrix& rhs) const;

    int rank() const;
    /// Square and of full rank. The 0x0 matrix is invertible.
    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    int prime_;
    int rows_;
    int cols_;
    std::vector<int> data_;
};

bool is_prime(int p);

}  // namespace arbor
