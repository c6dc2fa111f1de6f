#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "lmck/complex.hpp"
#include "lmck/field.hpp"

namespace lmck {

// Sparse vector over the (d-1)-face rows: strictly increasing indices,
// coefficients in [1, q-1].
template <class F>
struct SparseVecT {
    std::vector<std::int32_t> idx;
    std::vector<typename F::Elem> val;

    bool empty() const { return idx.empty(); }
    std::size_t nnz() const { return idx.size(); }
    void clear() {
        idx.clear();
        val.clear();
    }
    void push(std::int32_t i, typename F::Elem v) {
        idx.push_back(i);
        val.push_back(std::move(v));
    }
};

// Incrementally maintained, fully reduced basis of a subspace of GF(q)^rows.
// Invariants: each basis vector has coefficient 1 at its pivot row, entry 0
// at every other vector's pivot row, and its pivot is its smallest row.
// Full reduction keeps residuals canonical and makes reduce() touch at most
// nnz(v) basis vectors.
template <class F>
class EliminationBasisT {
public:
    using Vec = SparseVecT<F>;

    EliminationBasisT(F field, std::int64_t rows)
        : f_(std::move(field)), rows_(rows), pivot_vec_(static_cast<std::size_t>(rows), -1) {
        if (rows < 0 || rows >= (std::int64_t(1) << 31))
            throw ResourceError("row count " + std::to_string(rows) +
                                " outside the supported elimination range");
    }

    const F& field() const { return f_; }
    std::int64_t rows() const { return rows_; }
    std::int64_t rank() const { return static_cast<std::int64_t>(vecs_.size()); }
    bool is_pivot_row(std::int32_t row) const { return pivot_vec_[row] >= 0; }

    // v minus its projection onto the span; zero iff v is in the span.
    Vec reduce(const Vec& v) const {
        Vec acc = v;
        Vec scratch;
        reduce_in_place(acc, scratch);
        return acc;
    }

    bool in_span(const Vec& v) const {
        Vec acc = v;
        Vec scratch;
        reduce_in_place(acc, scratch);
        return acc.empty();
    }

    // Caller-provided scratch variant for tight loops.
    void reduce_into(const Vec& v, Vec& acc, Vec& scratch) const {
        acc = v;
        reduce_in_place(acc, scratch);
    }

    // Returns true (and grows the basis) iff v is independent of the span.
    bool insert(const Vec& v) {
        Vec residual = v;
        Vec scratch;
        reduce_in_place(residual, scratch);
        if (residual.empty()) return false;

        // normalize so the pivot (smallest row) carries coefficient 1
        const std::int32_t pivot = residual.idx[0];
        const auto inv = f_.scale(f_.inv(residual.val[0]));
        for (auto& x : residual.val) x = f_.mul_scaled(inv, x);

        // restore full reduction: clear the new pivot row everywhere
        const auto nvecs = vecs_.size();
        for (std::size_t k = 0; k < nvecs; ++k) {
            Vec& w = vecs_[k];
            const auto it = std::lower_bound(w.idx.begin(), w.idx.end(), pivot);
            if (it == w.idx.end() || *it != pivot) continue;
            const auto pos = static_cast<std::size_t>(it - w.idx.begin());
            axpy_merge(w, f_.scale(f_.neg(w.val[pos])), residual, scratch);
            w.idx.swap(scratch.idx);
            w.val.swap(scratch.val);
        }
        pivot_vec_[pivot] = static_cast<std::int32_t>(vecs_.size());
        vecs_.push_back(std::move(residual));
        return true;
    }

    const Vec& basis_vector(std::size_t k) const { return vecs_[k]; }

private:
    // acc <- reduced(acc). Every elimination step removes one pivot row and
    // only introduces non-pivot rows, so a single ascending pass suffices.
    void reduce_in_place(Vec& acc, Vec& scratch) const {
        std::size_t i = 0;
        while (i < acc.idx.size()) {
            const std::int32_t row = acc.idx[i];
            const std::int32_t vk = pivot_vec_[row];
            if (vk < 0) {
                ++i;
                continue;
            }
            axpy_merge(acc, f_.scale(f_.neg(acc.val[i])), vecs_[vk], scratch);
            acc.idx.swap(scratch.idx);
            acc.val.swap(scratch.val);
            // entries before position i are untouched: the basis vector's
            // smallest row is `row` itself
        }
    }

    // scratch <- a + c * b (sorted sparse merge, zero results dropped).
    void axpy_merge(const Vec& a, const typename F::Scaled& c, const Vec& b, Vec& scratch) const {
        scratch.clear();
        scratch.idx.reserve(a.nnz() + b.nnz());
        scratch.val.reserve(a.nnz() + b.nnz());
        std::size_t i = 0, j = 0;
        while (i < a.idx.size() && j < b.idx.size()) {
            if (a.idx[i] < b.idx[j]) {
                scratch.push(a.idx[i], a.val[i]);
                ++i;
            } else if (a.idx[i] > b.idx[j]) {
                scratch.push(b.idx[j], f_.mul_scaled(c, b.val[j]));
                ++j;
            } else {
                auto s = f_.add(a.val[i], f_.mul_scaled(c, b.val[j]));
                if (!f_.is_zero(s)) scratch.push(a.idx[i], std::move(s));
                ++i;
                ++j;
            }
        }
        for (; i < a.idx.size(); ++i) scratch.push(a.idx[i], a.val[i]);
        for (; j < b.idx.size(); ++j) scratch.push(b.idx[j], f_.mul_scaled(c, b.val[j]));
    }

    F f_;
    std::int64_t rows_;
    std::vector<Vec> vecs_;
    std::vector<std::int32_t> pivot_vec_;
};

using Basis64 = EliminationBasisT<Fp64>;
using BasisBig = EliminationBasisT<FpBig>;

// GF(2) specialization on bit words; keeps the same invariants.
class Gf2Basis {
public:
    explicit Gf2Basis(std::int64_t rows);

    std::int64_t rank() const { return static_cast<std::int64_t>(vecs_.size()); }
    std::int64_t rows() const { return rows_; }

    // `support` holds strictly increasing row indices of a 0/1 vector.
    bool in_span(const std::vector<std::int32_t>& support) const;
    bool insert(const std::vector<std::int32_t>& support);

private:
    using Word = std::uint64_t;
    bool load_reduced(const std::vector<std::int32_t>& support, std::vector<Word>& acc) const;

    std::int64_t rows_;
    std::size_t words_;
    std::vector<std::vector<Word>> vecs_;
    std::vector<std::int32_t> pivot_vec_;
};

// Boundary-image basis of a growing face set at a fixed prime, dispatching
// between the GF(2) bit path, machine words, and arbitrary precision.
class BoundaryBasis {
public:
    BoundaryBasis(const ComplexSpec& spec, const PrimeModulus& q, bool force_generic = false);

    const ComplexSpec& spec() const { return spec_; }
    std::int64_t rank() const;

    // true iff the face's boundary was independent (the face is q-reducing
    // for the complex inserted so far).
    bool insert_face(FaceId f);
    bool face_in_span(FaceId f) const;

private:
    template <class F>
    SparseVecT<F> boundary_vec(const F& f, FaceId id) const;

    ComplexSpec spec_;
    std::variant<Gf2Basis, Basis64, BasisBig> impl_;
};

// Rank over GF(q) of the boundary map restricted to the faces of Y.
std::int64_t boundary_rank(const DComplex& y, const PrimeModulus& q);

}  // namespace lmck
