#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "bcpa/construction.hpp"
#include "bcpa/dft.hpp"
#include "bcpa/ndarray.hpp"

namespace bcpa {

inline double corr_magnitude(const std::complex<double>& v) { return std::abs(v); }
inline double corr_magnitude(const Quaternion<double>& v) { return norm(v); }

// Full periodic correlation over the shift space (same dims as the inputs).
// values is row-major over shift vectors; entries with magnitude below the
// effective tolerance have been chopped to exactly zero. rel_tol is a
// fraction of the cell count M, for arrays large enough that float error
// outgrows a fixed absolute threshold.
template <class V>
struct CorrelationResult {
    std::vector<int> dims;
    std::vector<V> values;
    double tol = kDefaultTol;
    double rel_tol = 0.0;

    double effective_tol() const {
        return std::max(tol, rel_tol * static_cast<double>(values.size()));
    }
};

using ComplexCorrelation = CorrelationResult<std::complex<double>>;
using QuaternionCorrelation = CorrelationResult<Quaternion<double>>;

template <class V>
void chop_in_place(CorrelationResult<V>& res) {
    const double cut = res.effective_tol();
    for (V& v : res.values)
        if (corr_magnitude(v) < cut) v = V{};
}

// Direct periodic cross-correlation: value at shift vector s is
//   sum over all cells x of S[x] * conj(T[(x + s) mod dims]).
// Quaternion inputs use the Hamilton product and quaternion conjugation with
// exactly that operand order. This is the reference path; every term is
// evaluated and summed with no transform tricks.
template <class A>
auto xcorr_nd(const A& S, const A& T, double tol = kDefaultTol, double rel_tol = 0.0)
    -> CorrelationResult<typename array_traits<A>::Ops::Value> {
    using traits = array_traits<A>;
    array_traits<A>::require_same_domain(S, T);
    if (S.cells.dims() != T.cells.dims())
        throw DimensionMismatchError("correlation needs arrays of identical dims");

    const auto ops = traits::ops(S);
    const auto& dims = S.cells.dims();
    const int rank = S.cells.rank();
    const auto sdata = S.cells.data();
    const auto tdata = T.cells.data();
    const auto strides = T.cells.strides();

    CorrelationResult<typename traits::Ops::Value> res{dims, {}, tol, rel_tol};
    res.values.assign(S.cells.size(), ops.zero());

    // Per-shift lookup tables: offset[a][x] = ((x + s[a]) mod dims[a]) * strides[a].
    std::vector<std::vector<std::size_t>> offset(static_cast<std::size_t>(rank));
    for (int a = 0; a < rank; ++a)
        offset[static_cast<std::size_t>(a)].resize(
            static_cast<std::size_t>(dims[static_cast<std::size_t>(a)]));

    const int last = rank - 1;
    const int last_len = dims[static_cast<std::size_t>(last)];
    const std::span<const int> prefix_dims(dims.data(), static_cast<std::size_t>(last));
    std::vector<int> shift(static_cast<std::size_t>(rank), 0);
    std::vector<int> x(static_cast<std::size_t>(last), 0);
    std::size_t out = 0;
    do {
        for (int a = 0; a < rank; ++a) {
            const int len = dims[static_cast<std::size_t>(a)];
            auto& table = offset[static_cast<std::size_t>(a)];
            for (int v = 0; v < len; ++v)
                table[static_cast<std::size_t>(v)] =
                    strides[static_cast<std::size_t>(a)] *
                    static_cast<std::size_t>((v + shift[static_cast<std::size_t>(a)]) % len);
        }
        auto acc = ops.zero();
        std::fill(x.begin(), x.end(), 0);
        std::size_t fs = 0;
        const auto& last_table = offset[static_cast<std::size_t>(last)];
        do {
            std::size_t base = 0;
            for (int a = 0; a < last; ++a)
                base += offset[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                    x[static_cast<std::size_t>(a)])];
            for (int xl = 0; xl < last_len; ++xl)
                acc += ops.corr_term(sdata[fs++],
                                     tdata[base + last_table[static_cast<std::size_t>(xl)]]);
        } while (next_index(prefix_dims, x));
        res.values[out++] = acc;
    } while (next_index(dims, shift));

    chop_in_place(res);
    return res;
}

namespace detail {

inline std::vector<std::complex<double>> to_complex(const RootArray& a) {
    const RootOps ops(a.r);
    std::vector<std::complex<double>> out;
    out.reserve(a.cells.size());
    for (const int e : a.cells.data()) out.push_back(ops.value(e));
    return out;
}

}  // namespace detail

// Transform-accelerated correlation, roots-of-unity arrays only. Evaluates
// both arrays to complex, runs per-axis cyclic DFTs and multiplies pointwise:
//   theta(s) = conj( IDFT( DFT(T) .* conj(DFT(S)) )(s) ).
// Agrees with xcorr_nd up to floating error far below any useful tol.
inline ComplexCorrelation xcorr_nd_fast(const RootArray& S, const RootArray& T,
                                        double tol = kDefaultTol, double rel_tol = 0.0) {
    array_traits<RootArray>::require_same_domain(S, T);
    if (S.cells.dims() != T.cells.dims())
        throw DimensionMismatchError("correlation needs arrays of identical dims");

    const auto& dims = S.cells.dims();
    const auto strides = S.cells.strides();
    std::vector<std::complex<double>> fs = detail::to_complex(S);
    std::vector<std::complex<double>> ft = detail::to_complex(T);
    detail::dft_all_axes(fs, dims, strides, -1);
    detail::dft_all_axes(ft, dims, strides, -1);
    for (std::size_t i = 0; i < fs.size(); ++i) ft[i] *= std::conj(fs[i]);
    detail::dft_all_axes(ft, dims, strides, +1);

    ComplexCorrelation res{dims, std::move(ft), tol, rel_tol};
    for (auto& v : res.values) v = std::conj(v);
    chop_in_place(res);
    return res;
}

inline ComplexCorrelation xcorr_nd_fast(const QuaternionArray&, const QuaternionArray&,
                                        double = kDefaultTol, double = 0.0) {
    throw UnsupportedDomainError(
        "transform correlation path supports roots-of-unity arrays only");
}

template <class V>
struct CensusEntry {
    std::vector<int> shift;
    V value;
};

template <class V>
struct Census {
    std::size_t count = 0;
    std::vector<CensusEntry<V>> entries;
};

// Shifts whose correlation magnitude reaches the effective tolerance.
template <class V>
Census<V> nonzero_census(const CorrelationResult<V>& res) {
    Census<V> census;
    const double cut = res.effective_tol();
    std::vector<int> shift(res.dims.size(), 0);
    std::size_t f = 0;
    do {
        if (corr_magnitude(res.values[f]) >= cut)
            census.entries.push_back({shift, res.values[f]});
        ++f;
    } while (next_index(res.dims, shift));
    census.count = census.entries.size();
    return census;
}

// Uses the transform path where it exists; quaternion arrays go direct.
template <class A>
auto correlate(const A& S, const A& T, double tol = kDefaultTol, bool fast = true,
               double rel_tol = 0.0) {
    if constexpr (std::is_same_v<A, RootArray>) {
        if (fast) return xcorr_nd_fast(S, T, tol, rel_tol);
        return xcorr_nd(S, T, tol, rel_tol);
    } else {
        (void)fast;
        return xcorr_nd(S, T, tol, rel_tol);
    }
}

template <class V>
struct ZczPair {
    long long k1 = 0, k2 = 0;
    std::size_t nonzero_count = 0;
    double peak = 0.0;
    std::vector<CensusEntry<V>> entries;
};

template <class V>
struct ZczReport {
    int d = 1;
    std::size_t cells = 0;    // M, the entry count of one member
    double zone_ratio = 0.0;  // d*d / M
    std::vector<ZczPair<V>> pairs;  // ordered pairs, row-major in member order
};

// Full pairwise correlation census over the ordered pairs of a family.
template <class A>
auto zcz_report(const ArrayFamily<A>& family, double tol = kDefaultTol, bool fast = true,
                double rel_tol = 0.0)
    -> ZczReport<typename array_traits<A>::Ops::Value> {
    if (family.members.empty()) throw Error("zcz_report: empty family");
    using V = typename array_traits<A>::Ops::Value;
    ZczReport<V> report;
    report.d = family.d;
    report.cells = family.members.front().cells.size();
    report.zone_ratio =
        static_cast<double>(family.d) * family.d / static_cast<double>(report.cells);
    const std::size_t count = family.members.size();
    report.pairs.reserve(count * count);
    for (std::size_t p = 0; p < count; ++p) {
        for (std::size_t q = 0; q < count; ++q) {
            const auto res = correlate(family.members[p], family.members[q], tol, fast, rel_tol);
            auto census = nonzero_census(res);
            ZczPair<V> pair;
            pair.k1 = family.ks[p];
            pair.k2 = family.ks[q];
            pair.nonzero_count = census.count;
            for (const auto& e : census.entries)
                pair.peak = std::max(pair.peak, corr_magnitude(e.value));
            pair.entries = std::move(census.entries);
            report.pairs.push_back(std::move(pair));
        }
    }
    return report;
}

}  // namespace bcpa
