#include "lmck/snf.hpp"

#include <algorithm>
#include <cstdlib>

namespace lmck {

namespace {

// Signals that the int64 fast path overflowed and the computation must be
// redone with arbitrary precision.
struct SnfOverflow {};

struct I64Ops {
    using T = std::int64_t;
    static std::uint64_t uabs(T a) {
        return a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
    }
    static T sub_mul(T a, T q, T b) {  // a - q*b
        T p, r;
        if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r))
            throw SnfOverflow{};
        return r;
    }
    static T quot_nearest(T a, T b) {
        if (b == 1) return a;
        if (b == -1) {
            T r;
            if (__builtin_sub_overflow(T(0), a, &r)) throw SnfOverflow{};
            return r;
        }
        T q = a / b;             // |b| >= 2, no overflow
        const T r = a - q * b;   // |r| < |b|
        if (uabs(r) * 2 > uabs(b)) q += ((a < 0) == (b < 0)) ? 1 : -1;
        return q;
    }
    static bool less_abs(T a, T b) { return uabs(a) < uabs(b); }
    static BigInt to_big(T a) { return BigInt(a); }
};

struct BigOps {
    using T = BigInt;
    static T sub_mul(const T& a, const T& q, const T& b) { return a - q * b; }
    static T quot_nearest(const T& a, const T& b) {
        T q = a / b;
        const T r = a - q * b;
        if (abs(r) * 2 > abs(b)) q += ((a < 0) == (b < 0)) ? 1 : -1;
        return q;
    }
    static bool less_abs(const T& a, const T& b) { return abs(a) < abs(b); }
    static BigInt to_big(const T& a) { return a; }
};

template <class T>
class DenseMat {
public:
    DenseMat(std::int64_t rows, std::int64_t cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}

    T& at(std::int64_t i, std::int64_t j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
    const T& at(std::int64_t i, std::int64_t j) const {
        return a_[static_cast<std::size_t>(i * cols_ + j)];
    }
    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }

private:
    std::int64_t rows_, cols_;
    std::vector<T> a_;
};

template <class T>
DenseMat<T> build_boundary_matrix(const DComplex& y) {
    const ComplexSpec& spec = y.spec();
    DenseMat<T> m(spec.row_count(), y.face_count());
    std::vector<std::pair<std::int64_t, int>> rows;
    for (std::int64_t j = 0; j < y.face_count(); ++j) {
        rows.clear();
        boundary_rows(spec, y.faces()[static_cast<std::size_t>(j)], rows);
        for (const auto& [row, sign] : rows) m.at(row, j) = T(sign);
    }
    return m;
}

// Diagonalization with minimum-magnitude pivoting: repeatedly pick the
// smallest nonzero entry of the active submatrix, then shrink the entries
// of its row and column by nearest-quotient subtraction until they vanish.
template <class Ops>
std::vector<BigInt> snf_diagonal(DenseMat<typename Ops::T>& m) {
    using T = typename Ops::T;
    const T zero{};
    std::vector<BigInt> diag;
    std::int64_t t = 0;
    const std::int64_t tmax = std::min(m.rows(), m.cols());
    while (t < tmax) {
        // smallest |entry| in the active submatrix
        std::int64_t pi = -1, pj = -1;
        for (std::int64_t i = t; i < m.rows(); ++i)
            for (std::int64_t j = t; j < m.cols(); ++j) {
                const T& v = m.at(i, j);
                if (v == zero) continue;
                if (pi < 0 || Ops::less_abs(v, m.at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        if (pi != t)
            for (std::int64_t j = t; j < m.cols(); ++j) std::swap(m.at(t, j), m.at(pi, j));
        if (pj != t)
            for (std::int64_t i = t; i < m.rows(); ++i) std::swap(m.at(i, t), m.at(i, pj));

        bool clean = false;
        while (!clean) {
            clean = true;
            // shrink column t
            for (std::int64_t i = t + 1; i < m.rows(); ++i) {
                if (m.at(i, t) == zero) continue;
                const T q = Ops::quot_nearest(m.at(i, t), m.at(t, t));
                if (q != zero)
                    for (std::int64_t j = t; j < m.cols(); ++j)
                        m.at(i, j) = Ops::sub_mul(m.at(i, j), q, m.at(t, j));
                if (m.at(i, t) != zero) {
                    // remainder is smaller than the pivot: promote it
                    for (std::int64_t j = t; j < m.cols(); ++j) std::swap(m.at(t, j), m.at(i, j));
                    clean = false;
                }
            }
            if (!clean) continue;
            // shrink row t
            for (std::int64_t j = t + 1; j < m.cols(); ++j) {
                if (m.at(t, j) == zero) continue;
                const T q = Ops::quot_nearest(m.at(t, j), m.at(t, t));
                if (q != zero)
                    for (std::int64_t i = t; i < m.rows(); ++i)
                        m.at(i, j) = Ops::sub_mul(m.at(i, j), q, m.at(i, t));
                if (m.at(t, j) != zero) {
                    for (std::int64_t i = t; i < m.rows(); ++i) std::swap(m.at(i, t), m.at(i, j));
                    clean = false;
                }
            }
        }
        diag.push_back(Ops::to_big(m.at(t, t)));
        ++t;
    }
    return diag;
}

// diag entries -> elementary divisor chain d_1 | d_2 | ... (all positive).
std::vector<BigInt> enforce_divisor_chain(std::vector<BigInt> d) {
    for (auto& v : d) v = abs(v);
    const std::size_t r = d.size();
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            if (d[j] % d[i] == 0) continue;
            const BigInt g = gcd(d[i], d[j]);
            d[j] = d[i] / g * d[j];
            d[i] = g;
        }
    }
    return d;  // pairwise gcd/lcm leaves an ascending chain
}

}  // namespace

ElementaryDivisors smith_normal_form(const DComplex& y, std::int64_t entry_budget) {
    const std::int64_t entries = y.spec().row_count() * y.face_count();
    if (entries > entry_budget)
        throw ResourceError("boundary matrix has " + std::to_string(entries) +
                            " entries, over the dense SNF budget of " +
                            std::to_string(entry_budget) +
                            "; use GF(q)-only operations at this scale");
    std::vector<BigInt> diag;
    try {
        DenseMat<std::int64_t> m = build_boundary_matrix<std::int64_t>(y);
        diag = snf_diagonal<I64Ops>(m);
    } catch (const SnfOverflow&) {
        DenseMat<BigInt> m = build_boundary_matrix<BigInt>(y);
        diag = snf_diagonal<BigOps>(m);
    }
    return ElementaryDivisors{enforce_divisor_chain(std::move(diag))};
}

BigInt torsion_order_bound(const ComplexSpec& spec) {
    const std::int64_t e = spec.binom(spec.n(), spec.d());
    if (e > 100'000'000)
        throw ResourceError("torsion bound exponent C(n,d) = " + std::to_string(e) +
                            " is too large to materialize");
    const BigInt base(spec.d() + 1);
    if (e % 2 == 0) return boost::multiprecision::pow(base, static_cast<unsigned>(e / 2));
    return isqrt_ceil(boost::multiprecision::pow(base, static_cast<unsigned>(e)));
}

BigInt hadamard_column_bound(const DComplex& y) {
    const std::int64_t m = y.face_count();
    if (m > 100'000'000)
        throw ResourceError("Hadamard bound exponent m = " + std::to_string(m) +
                            " is too large to materialize");
    const BigInt base(y.spec().d() + 1);
    if (m % 2 == 0) return boost::multiprecision::pow(base, static_cast<unsigned>(m / 2));
    return isqrt_ceil(boost::multiprecision::pow(base, static_cast<unsigned>(m)));
}

TorsionPrimes torsion_primes(const ElementaryDivisors& divs, const FactorPolicy& policy) {
    TorsionPrimes out;
    std::vector<BigInt> all;
    bool complete = true;
    for (const BigInt& d : divs.divisors) {
        if (d <= 1) continue;
        const FactorResult f = factor_distinct_primes(d, policy);
        complete = complete && f.complete;
        all.insert(all.end(), f.primes.begin(), f.primes.end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    out.primes = std::move(all);
    out.complete = complete;
    return out;
}

}  // namespace lmck
