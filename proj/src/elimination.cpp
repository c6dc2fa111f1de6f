#include "lmck/elimination.hpp"

#include <bit>

namespace lmck {

Gf2Basis::Gf2Basis(std::int64_t rows)
    : rows_(rows),
      words_(static_cast<std::size_t>((rows + 63) / 64)),
      pivot_vec_(static_cast<std::size_t>(rows), -1) {
    if (rows < 0 || rows >= (std::int64_t(1) << 31))
        throw ResourceError("row count " + std::to_string(rows) +
                            " outside the supported elimination range");
}

bool Gf2Basis::load_reduced(const std::vector<std::int32_t>& support,
                            std::vector<Word>& acc) const {
    acc.assign(words_, 0);
    bool any = false;
    for (std::int32_t row : support) {
        acc[static_cast<std::size_t>(row) >> 6] ^= Word(1) << (row & 63);
        any = true;
    }
    // Full reduction: only the original support can hit pivot rows, and
    // XORing a basis row only toggles non-pivot rows.
    for (std::int32_t row : support) {
        const std::int32_t vk = pivot_vec_[row];
        if (vk < 0) continue;
        if (!(acc[static_cast<std::size_t>(row) >> 6] >> (row & 63) & 1)) continue;
        const std::vector<Word>& b = vecs_[static_cast<std::size_t>(vk)];
        for (std::size_t w = 0; w < words_; ++w) acc[w] ^= b[w];
    }
    return any;
}

bool Gf2Basis::in_span(const std::vector<std::int32_t>& support) const {
    std::vector<Word> acc;
    load_reduced(support, acc);
    for (Word w : acc)
        if (w) return false;
    return true;
}

bool Gf2Basis::insert(const std::vector<std::int32_t>& support) {
    std::vector<Word> acc;
    load_reduced(support, acc);
    std::int32_t pivot = -1;
    for (std::size_t w = 0; w < words_; ++w) {
        if (acc[w]) {
            pivot = static_cast<std::int32_t>(w * 64 + std::countr_zero(acc[w]));
            break;
        }
    }
    if (pivot < 0) return false;
    const std::size_t pw = static_cast<std::size_t>(pivot) >> 6;
    const Word pbit = Word(1) << (pivot & 63);
    for (auto& v : vecs_) {
        if (v[pw] & pbit)
            for (std::size_t w = 0; w < words_; ++w) v[w] ^= acc[w];
    }
    pivot_vec_[pivot] = static_cast<std::int32_t>(vecs_.size());
    vecs_.push_back(std::move(acc));
    return true;
}

namespace {

// thread-local so concurrent read-only queries never share scratch
std::vector<std::pair<std::int64_t, int>>& row_scratch() {
    thread_local std::vector<std::pair<std::int64_t, int>> s;
    s.clear();
    return s;
}

}  // namespace

template <class F>
SparseVecT<F> BoundaryBasis::boundary_vec(const F& f, FaceId id) const {
    auto& rows = row_scratch();
    boundary_rows(spec_, id, rows);
    SparseVecT<F> v;
    v.idx.reserve(rows.size());
    v.val.reserve(rows.size());
    for (const auto& [row, sign] : rows)
        v.push(static_cast<std::int32_t>(row), f.from_int(sign));
    return v;
}

BoundaryBasis::BoundaryBasis(const ComplexSpec& spec, const PrimeModulus& q, bool force_generic)
    : spec_(spec),
      impl_(Gf2Basis(0)) {
    const std::int64_t rows = spec.row_count();
    if (rows >= (std::int64_t(1) << 31))
        throw ResourceError("C(n,d) = " + std::to_string(rows) +
                            " rows exceed the elimination range");
    if (q.value() == 2 && !force_generic)
        impl_ = Gf2Basis(rows);
    else if (q.fits_machine_word())
        impl_ = Basis64(Fp64(q.as_u64()), rows);
    else
        impl_ = BasisBig(FpBig(q.value()), rows);
}

std::int64_t BoundaryBasis::rank() const {
    return std::visit([](const auto& b) { return b.rank(); }, impl_);
}

bool BoundaryBasis::insert_face(FaceId f) {
    if (auto* g2 = std::get_if<Gf2Basis>(&impl_)) {
        auto& rows = row_scratch();
        boundary_rows(spec_, f, rows);
        std::vector<std::int32_t> support;
        support.reserve(rows.size());
        for (const auto& [row, sign] : rows)
            support.push_back(static_cast<std::int32_t>(row));
        return g2->insert(support);
    }
    if (auto* b64 = std::get_if<Basis64>(&impl_))
        return b64->insert(boundary_vec(b64->field(), f));
    auto& big = std::get<BasisBig>(impl_);
    return big.insert(boundary_vec(big.field(), f));
}

bool BoundaryBasis::face_in_span(FaceId f) const {
    if (auto* g2 = std::get_if<Gf2Basis>(&impl_)) {
        auto& rows = row_scratch();
        boundary_rows(spec_, f, rows);
        std::vector<std::int32_t> support;
        support.reserve(rows.size());
        for (const auto& [row, sign] : rows)
            support.push_back(static_cast<std::int32_t>(row));
        return g2->in_span(support);
    }
    if (auto* b64 = std::get_if<Basis64>(&impl_))
        return b64->in_span(boundary_vec(b64->field(), f));
    const auto& big = std::get<BasisBig>(impl_);
    return big.in_span(boundary_vec(big.field(), f));
}

std::int64_t boundary_rank(const DComplex& y, const PrimeModulus& q) {
    BoundaryBasis basis(y.spec(), q);
    for (FaceId f : y.faces()) basis.insert_face(f);
    return basis.rank();
}

}  // namespace lmck
