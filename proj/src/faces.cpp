#include "lmck/faces.hpp"

#include <algorithm>
#include <string>

namespace lmck {

namespace {

constexpr std::int64_t kOverflow = -1;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    if (a == kOverflow || b == kOverflow) return kOverflow;
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) return kOverflow;
    return r;
}

}  // namespace

ComplexSpec::ComplexSpec(int n, int d) : n_(n), d_(d) {
    if (d < 1) throw ValidationError("d must be >= 1, got " + std::to_string(d));
    if (n < d + 2)
        throw ValidationError("n must be >= d+2 (n=" + std::to_string(n) +
                              ", d=" + std::to_string(d) + ")");
    const int cols = d + 2;
    auto table = std::make_shared<std::vector<std::int64_t>>(
        static_cast<std::size_t>(n + 1) * cols, 0);
    auto at = [&](int a, int b) -> std::int64_t& {
        return (*table)[static_cast<std::size_t>(a) * cols + b];
    };
    for (int a = 0; a <= n; ++a) {
        at(a, 0) = 1;
        for (int b = 1; b <= d + 1; ++b)
            at(a, b) = (a == 0) ? 0 : checked_add(at(a - 1, b - 1), at(a - 1, b));
    }
    table_ = std::move(table);
    if (face_count() == kOverflow)
        throw ValidationError("C(n, d+1) overflows 64-bit integers; n=" + std::to_string(n) +
                              " d=" + std::to_string(d) + " is beyond the supported scale");
}

std::int64_t ComplexSpec::binom(int a, int b) const {
    if (b < 0 || b > a) return 0;
    if (a > n_ || b > d_ + 1) throw InvariantError("binomial query outside precomputed table");
    return (*table_)[static_cast<std::size_t>(a) * (d_ + 2) + b];
}

std::int64_t rank_subset(const ComplexSpec& spec, const std::vector<Vertex>& tuple, int k) {
    if (static_cast<int>(tuple.size()) != k)
        throw ValidationError("expected a " + std::to_string(k) + "-subset, got " +
                              std::to_string(tuple.size()) + " vertices");
    std::int64_t r = 0;
    Vertex prev = -1;
    for (int i = 0; i < k; ++i) {
        const Vertex v = tuple[i];
        if (v <= prev)
            throw ValidationError("vertices must be strictly increasing");
        if (v < 0 || v >= spec.n())
            throw ValidationError("vertex " + std::to_string(v) + " out of range [0, " +
                                  std::to_string(spec.n()) + ")");
        r += spec.binom(v, i + 1);
        prev = v;
    }
    return r;
}

std::vector<Vertex> unrank_subset(const ComplexSpec& spec, std::int64_t id, int k) {
    if (id < 0 || id >= spec.binom(spec.n(), k))
        throw ValidationError("subset id " + std::to_string(id) + " out of range [0, " +
                              std::to_string(spec.binom(spec.n(), k)) + ")");
    std::vector<Vertex> tuple(k);
    std::int64_t rem = id;
    int hi = spec.n();  // exclusive upper bound for the next vertex
    for (int i = k - 1; i >= 0; --i) {
        // largest v in [i, hi) with C(v, i+1) <= rem
        int lo = i, up = hi - 1, v = i;
        while (lo <= up) {
            const int mid = lo + (up - lo) / 2;
            if (spec.binom(mid, i + 1) <= rem) {
                v = mid;
                lo = mid + 1;
            } else {
                up = mid - 1;
            }
        }
        tuple[i] = static_cast<Vertex>(v);
        rem -= spec.binom(v, i + 1);
        hi = v;
    }
    return tuple;
}

std::vector<BoundaryFacet> boundary(const ComplexSpec& spec, const std::vector<Vertex>& face) {
    rank_face(spec, face);  // validates shape and range
    const int k = spec.d() + 1;
    std::vector<BoundaryFacet> facets;
    facets.reserve(k);
    for (int i = 0; i < k; ++i) {
        BoundaryFacet f;
        f.sign = (i % 2 == 0) ? 1 : -1;
        f.vertices.reserve(k - 1);
        for (int j = 0; j < k; ++j)
            if (j != i) f.vertices.push_back(face[j]);
        facets.push_back(std::move(f));
    }
    return facets;
}

void boundary_rows(const ComplexSpec& spec, FaceId id,
                   std::vector<std::pair<std::int64_t, int>>& out) {
    const std::vector<Vertex> face = unrank_face(spec, id);
    const int k = spec.d() + 1;
    // Facet i drops face[i]; the remaining vertices keep relative order, so
    // its colex rank is a prefix/suffix split of the rank sum.
    const std::size_t base = out.size();
    for (int i = 0; i < k; ++i) {
        std::int64_t r = 0;
        for (int j = 0; j < i; ++j) r += spec.binom(face[j], j + 1);
        for (int j = i + 1; j < k; ++j) r += spec.binom(face[j], j);
        out.emplace_back(r, (i % 2 == 0) ? 1 : -1);
    }
    std::sort(out.begin() + base, out.end());
}

}  // namespace lmck
