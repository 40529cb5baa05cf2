#pragma once

#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "bcpa/ndarray.hpp"
#include "bcpa/sequence.hpp"

namespace bcpa {

// N-dimensional array in index notation over r roots of unity.
//
// Axis convention used everywhere in this library: axis 0 is j, the position
// in the base sequence (length n); axes 1..N-1 are the block-sequence indices
// i_0..i_{N-2} (length m each). Correlation shift vectors use the same order,
// so the "outer" shift component of a result is always component 0.
struct RootArray {
    int r = 1;
    NdArray<int> cells;

    friend bool operator==(const RootArray&, const RootArray&) = default;
};

struct QuaternionArray {
    NdArray<Quaternion<int>> cells;

    friend bool operator==(const QuaternionArray&, const QuaternionArray&) = default;
};

template <class A>
struct array_traits;

template <>
struct array_traits<RootArray> {
    using Ops = RootOps;
    using Sequence = RootSequence;
    static Ops ops(const RootArray& a) { return RootOps(a.r); }
    static void require_same_domain(const RootArray& a, const RootArray& b) {
        if (a.r != b.r)
            throw DomainMismatchError("root orders differ: " + std::to_string(a.r) + " vs " +
                                      std::to_string(b.r));
    }
};

template <>
struct array_traits<QuaternionArray> {
    using Ops = QuatOps;
    using Sequence = QuaternionSequence;
    static Ops ops(const QuaternionArray&) { return {}; }
    static void require_same_domain(const QuaternionArray&, const QuaternionArray&) {}
};

template <class S>
struct sequence_array {
    using type =
        std::conditional_t<std::is_same_v<S, RootSequence>, RootArray, QuaternionArray>;
};
template <class S>
using sequence_array_t = typename sequence_array<S>::type;

template <class S>
struct ConstructionParams {
    S base;                   // the multiplying sequence a, length n
    SequenceBlock<S> block;   // c(0)..c(d-1), each of length m
    long long k = 0;          // family parameter; used mod m
    int dims = 2;             // total number of axes N
    bool strict = true;       // verify preconditions before constructing
    double tol = kDefaultTol; // tolerance for the strict checks
};

// Preconditions the construction's guarantees rest on. Throws StrictModeError
// naming the first violated condition. m ≡ 0 (mod d) is enforced by
// SequenceBlock itself.
template <class S>
void check_construction_preconditions(const S& base, const SequenceBlock<S>& block,
                                      double tol = kDefaultTol) {
    if (!is_perfect(base, tol))
        throw StrictModeError("strict mode: base sequence is not perfect at tol " +
                              std::to_string(tol));
    const int n = static_cast<int>(base.size());
    if (n % block.d() != 0)
        throw StrictModeError("strict mode: block size " + std::to_string(block.d()) +
                              " does not divide the base length " + std::to_string(n));
    const AopReport aop = aop_check(base, block.d(), tol);
    if (!aop.holds) {
        const AopFailure& f = aop.failures.front();
        throw StrictModeError(std::string("strict mode: base sequence lacks the array "
                                          "orthogonality property for d = ") +
                              std::to_string(block.d()) + " (condition " +
                              to_string(f.condition) + ", residue " + std::to_string(f.residue) +
                              ", shift " + std::to_string(f.shift) + ")");
    }
    for (int t = 0; t < block.d(); ++t)
        if (!is_perfect(block.sequences[static_cast<std::size_t>(t)], tol))
            throw StrictModeError("strict mode: block sequence " + std::to_string(t) +
                                  " is not perfect at tol " + std::to_string(tol));
}

// Block-circulant construction. The entry at (j, i_0, ..., i_{N-2}) is
//
//   a[j] * prod_{v=0}^{N-2} c(j mod d)[(w*floor(j/d) + k*(j mod d) + i_v) mod m]
//
// with w = m/d. Over roots of unity the product is an exponent sum mod r; over
// quaternions it is the ordered product a[j] ** term(i_0) ** ... ** term(i_{N-2}).
// Output dims are [n, m, ..., m] with N-1 trailing axes.
template <class S>
sequence_array_t<S> construct_nd(const ConstructionParams<S>& p) {
    using traits = seq_traits<S>;
    if (p.dims < 2) throw Error("construction needs at least 2 dimensions");
    if (p.base.size() == 0) throw Error("base sequence is empty");
    traits::require_same_domain(p.base, p.block.sequences.front());
    if (p.strict) check_construction_preconditions(p.base, p.block, p.tol);

    const auto ops = traits::ops(p.base);
    const auto& a = traits::elems(p.base);
    const int n = static_cast<int>(a.size());
    const int d = p.block.d();
    const int m = p.block.m();
    const int w = p.block.w();
    const int k = floor_mod(p.k, m);

    std::vector<int> dims(static_cast<std::size_t>(p.dims), m);
    dims[0] = n;
    NdArray<typename traits::Element> cells(dims);

    std::vector<int> idx(static_cast<std::size_t>(p.dims), 0);
    std::size_t f = 0;
    do {
        const int j = idx[0];
        const auto& c = traits::elems(p.block.sequences[static_cast<std::size_t>(j % d)]);
        const long long offset =
            static_cast<long long>(w) * (j / d) + static_cast<long long>(k) * (j % d);
        auto e = a[static_cast<std::size_t>(j)];
        for (int axis = 1; axis < p.dims; ++axis)
            e = ops.mul(e, c[static_cast<std::size_t>(
                            floor_mod(offset + idx[static_cast<std::size_t>(axis)], m))]);
        cells[f++] = e;
    } while (next_index(dims, idx));

    if constexpr (std::is_same_v<S, RootSequence>)
        return RootArray{p.base.r, std::move(cells)};
    else
        return QuaternionArray{std::move(cells)};
}

template <class A>
struct ArrayFamily {
    std::vector<long long> ks;
    std::vector<A> members;
    int d = 1;
};

// One construction per k, all sharing base/block/dims. Strict preconditions
// do not depend on k, so they are checked once up front.
template <class S>
ArrayFamily<sequence_array_t<S>> construct_family(const S& base, const SequenceBlock<S>& block,
                                                  std::span<const long long> ks, int dims,
                                                  bool strict = true, double tol = kDefaultTol) {
    if (strict && !ks.empty()) check_construction_preconditions(base, block, tol);
    ArrayFamily<sequence_array_t<S>> family;
    family.d = block.d();
    family.ks.assign(ks.begin(), ks.end());
    family.members.reserve(ks.size());
    for (const long long k : ks)
        family.members.push_back(construct_nd<S>({base, block, k, dims, false, tol}));
    return family;
}

}  // namespace bcpa
