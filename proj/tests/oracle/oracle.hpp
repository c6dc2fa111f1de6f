#pragma once

// Slow, obviously-correct reference implementations. Test surface only;
// nothing here is linked into the CLI.

#include <vector>

#include "lmck/complex.hpp"
#include "lmck/field.hpp"
#include "lmck/numbers.hpp"

namespace lmck::oracle {

class DenseMatrix {
public:
    DenseMatrix(std::int64_t rows, std::int64_t cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}

    BigInt& at(std::int64_t i, std::int64_t j) {
        return a_[static_cast<std::size_t>(i * cols_ + j)];
    }
    const BigInt& at(std::int64_t i, std::int64_t j) const {
        return a_[static_cast<std::size_t>(i * cols_ + j)];
    }
    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }

private:
    std::int64_t rows_, cols_;
    std::vector<BigInt> a_;
};

// Columns are the boundaries of the faces of Y.
DenseMatrix boundary_matrix(const DComplex& y);

// Exact rank over Q by fraction-free (Bareiss) elimination.
std::int64_t bareiss_rank(DenseMatrix m);

// Textbook Smith normal form: first-nonzero pivot improved to a gcd by
// Bezout row/column steps, divisibility enforced before moving on.
std::vector<BigInt> naive_snf(DenseMatrix m);

// Exact rank over GF(q) by plain dense elimination.
std::int64_t dense_rank_mod_q(const DenseMatrix& m, const BigInt& q);

// The q-reducing set computed literally: faces whose addition changes the
// mod-q Betti number, by full recomputation per face.
std::vector<FaceId> brute_reducing_set(const DComplex& y, const PrimeModulus& q);

}  // namespace lmck::oracle
