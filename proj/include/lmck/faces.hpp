#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "lmck/errors.hpp"

namespace lmck {

// Colex index of a d-face, i.e. of a (d+1)-subset of {0,...,n-1}.
using FaceId = std::int64_t;
using Vertex = std::int32_t;

// Parameters of a d-complex on n vertices with complete (d-1)-skeleton,
// plus the binomial table that backs colex rank/unrank. Construction fails
// if C(n, d+1) does not fit in a signed 64-bit integer; everything past
// that point is out of desk scale by orders of magnitude.
class ComplexSpec {
public:
    ComplexSpec(int n, int d);

    int n() const { return n_; }
    int d() const { return d_; }

    // C(n, d+1): number of possible d-faces.
    std::int64_t face_count() const { return binom(n_, d_ + 1); }
    // C(n, d): number of (d-1)-faces, the rows of the boundary matrix.
    std::int64_t row_count() const { return binom(n_, d_); }
    // C(n-1, d): dim Z_{d-1} of the complete (d-1)-skeleton over any field.
    std::int64_t cycle_dim() const { return binom(n_ - 1, d_); }

    // C(a, b) for 0 <= a <= n, 0 <= b <= d+1 (and b <= a+1).
    std::int64_t binom(int a, int b) const;

    bool operator==(const ComplexSpec& o) const { return n_ == o.n_ && d_ == o.d_; }
    bool operator!=(const ComplexSpec& o) const { return !(*this == o); }

private:
    int n_;
    int d_;
    // (n+1) x (d+2) row-major Pascal table, shared between copies.
    std::shared_ptr<const std::vector<std::int64_t>> table_;
};

// Colex rank of a strictly increasing k-subset: sum of C(v_i, i+1).
// k = d+1 for d-faces, k = d for the (d-1)-face rows.
std::int64_t rank_subset(const ComplexSpec& spec, const std::vector<Vertex>& tuple, int k);
std::vector<Vertex> unrank_subset(const ComplexSpec& spec, std::int64_t id, int k);

inline FaceId rank_face(const ComplexSpec& spec, const std::vector<Vertex>& tuple) {
    return rank_subset(spec, tuple, spec.d() + 1);
}
inline std::vector<Vertex> unrank_face(const ComplexSpec& spec, FaceId id) {
    return unrank_subset(spec, id, spec.d() + 1);
}

// One signed facet of a simplicial boundary.
struct BoundaryFacet {
    int sign;  // +1 or -1
    std::vector<Vertex> vertices;
};

// The d+1 facets of `face`, facet i = face with vertex i removed, sign (-1)^i.
std::vector<BoundaryFacet> boundary(const ComplexSpec& spec, const std::vector<Vertex>& face);

// Fast path for the linear algebra: (row id, sign) pairs of the facets of
// face `id`, sorted by row id. Appends d+1 entries to `out`.
void boundary_rows(const ComplexSpec& spec, FaceId id,
                   std::vector<std::pair<std::int64_t, int>>& out);

}  // namespace lmck
