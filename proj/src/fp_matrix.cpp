#include "arbor/fp_matrix.hpp"

#include <string>
#include <utility>

#include "arbor/error.hpp"

namespace arbor {

namespace {

int mod_inverse(int x, int p) {
    // p is prime and small, so Fermat is fine.
    long long result = 1;
    long long base = x % p;
    int e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<int>(result);
}

}  // namespace

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

FpMatrix::FpMatrix(int prime, int rows, int cols)
    : prime_(prime), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
    if (!is_prime(prime)) throw DomainError("field size " + std::to_string(prime) + " is not prime");
    if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
}

FpMatrix FpMatrix::identity(int prime, int n) {
    FpMatrix m(prime, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void FpMatrix::set(int r, int c, int value) {
    const int v = value % prime_;
    data_[static_cast<std::size_t>(r) * cols_ + c] = v < 0 ? v + prime_ : v;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
    if (cols_ != rhs.rows_ || prime_ != rhs.prime_) {
        throw DomainError("matrix shapes or fields do not match for multiplication");
    }
    FpMatrix out(prime_, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < rhs.cols_; ++j) {
            long long acc = 0;
            for (int k = 0; k < cols_; ++k) acc += static_cast<long long>(at(i, k)) * rhs.at(k, j);
            out.data_[static_cast<std::size_t>(i) * out.cols_ + j] = static_cast<int>(acc % prime_);
        }
    }
    return out;
}

int FpMatrix::rank() const {
    std::vector<int> m = data_;
    auto cell = [&](int r, int c) -> int& { return m[static_cast<std::size_t>(r) * cols_ + c]; };
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r) {
            if (cell(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int c = 0; c < cols_; ++c) std::swap(cell(pivot, c), cell(rank, c));
        }
        const int inv = mod_inverse(cell(rank, col), prime_);
        for (int c = 0; c < cols_; ++c) cell(rank, c) = cell(rank, c) * inv % prime_;
        for (int r = 0; r < rows_; ++r) {
            if (r == rank || cell(r, col) == 0) continue;
            const int factor = cell(r, col);
            for (int c = 0; c < cols_; ++c) {
                cell(r, c) = ((cell(r, c) - factor * cell(rank, c)) % prime_ + prime_) % prime_;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace arbor
