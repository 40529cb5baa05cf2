#include <doctest.h>

#include <array>
#include <vector>

#include "bcpa/construction.hpp"
#include "golden_data.hpp"

using bcpa::ConstructionParams;
using bcpa::QuaternionSequence;
using bcpa::RootArray;
using bcpa::RootSequence;
using bcpa::SequenceBlock;

namespace {

SequenceBlock<RootSequence> binary_block() {
    const auto f2 = bcpa::frank(2);
    return SequenceBlock<RootSequence>({f2, bcpa::decimate(f2, 3)});
}

SequenceBlock<RootSequence> ternary_block() {
    const auto f3 = bcpa::frank(3);
    return SequenceBlock<RootSequence>(
        {bcpa::decimate(f3, 2), bcpa::decimate(f3, 5), bcpa::decimate(f3, 7)});
}

QuaternionSequence q16() { return bcpa::parse_quaternion_sequence(golden::kQ16Tokens); }

// Direct 2-D evaluation: S[j][i] = a[j] * c(j mod d)[(w*floor(j/d) + k*(j mod d) + i) mod m].
// Kept deliberately separate from construct_nd so the two act as cross-checks.
RootArray construction_2d_reference(const RootSequence& base,
                                    const SequenceBlock<RootSequence>& block, long long k) {
    const int n = static_cast<int>(base.size());
    const int d = block.d(), m = block.m(), w = block.w();
    RootArray out{base.r, bcpa::NdArray<int>({n, m})};
    for (int j = 0; j < n; ++j) {
        const auto& c = block.sequences[static_cast<std::size_t>(j % d)].exponents;
        for (int i = 0; i < m; ++i) {
            const long long pos = static_cast<long long>(w) * (j / d) + k * (j % d) + i;
            const int e = (base.exponents[static_cast<std::size_t>(j)] +
                           c[static_cast<std::size_t>(bcpa::floor_mod(pos, m))]) %
                          base.r;
            const std::array<int, 2> idx{j, i};
            out.cells.at(idx) = e;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("binary 4-D construction matches the reference table") {
    const auto array =
        bcpa::construct_nd<RootSequence>({bcpa::frank(2), binary_block(), 0, 4});
    REQUIRE(array.r == 2);
    REQUIRE(array.cells.dims() == std::vector<int>{4, 4, 4, 4});
    for (int j = 0; j < 4; ++j)
        for (int i0 = 0; i0 < 4; ++i0)
            for (int i1 = 0; i1 < 4; ++i1)
                for (int i2 = 0; i2 < 4; ++i2) {
                    const std::array<int, 4> idx{j, i0, i1, i2};
                    CAPTURE(j);
                    CAPTURE(i0);
                    CAPTURE(i1);
                    CAPTURE(i2);
                    CHECK(array.cells.at(idx) == golden::kBinary4D[j][i0][i1][i2]);
                }
}

TEST_CASE("16x16 quaternion construction matches the reference table") {
    const auto base = q16();
    const SequenceBlock<QuaternionSequence> block(
        {base, bcpa::decimate(base, 3), bcpa::rotate_right(base, 2), base});
    const auto array = bcpa::construct_nd<QuaternionSequence>({base, block, 0, 2});
    REQUIRE(array.cells.dims() == std::vector<int>{16, 16});
    for (int j = 0; j < 16; ++j) {
        const auto row = bcpa::parse_quaternion_sequence(golden::kQuat16Rows[j]);
        REQUIRE(row.size() == 16);
        for (int i = 0; i < 16; ++i) {
            const std::array<int, 2> idx{j, i};
            CAPTURE(j);
            CAPTURE(i);
            CHECK(array.cells.at(idx) == row.values[static_cast<std::size_t>(i)]);
        }
    }
}

TEST_CASE("N=2 construction equals the direct 2-D formula") {
    struct Case {
        RootSequence base;
        SequenceBlock<RootSequence> block;
        long long k;
    };
    const std::vector<Case> cases = {
        {bcpa::frank(2), binary_block(), 0},
        {bcpa::frank(2), binary_block(), 3},
        {bcpa::frank(3), ternary_block(), 1},
        {bcpa::frank(3), ternary_block(), 2},
    };
    for (const auto& c : cases) {
        const auto built = bcpa::construct_nd<RootSequence>({c.base, c.block, c.k, 2});
        const auto reference = construction_2d_reference(c.base, c.block, c.k);
        CHECK(built == reference);
    }
}

TEST_CASE("construction is deterministic") {
    const ConstructionParams<RootSequence> params{bcpa::frank(3), ternary_block(), 4, 3};
    CHECK(bcpa::construct_nd(params) == bcpa::construct_nd(params));
}

TEST_CASE("construction shape and entry range") {
    for (int dims : {2, 3, 4}) {
        const auto array =
            bcpa::construct_nd<RootSequence>({bcpa::frank(3), ternary_block(), 2, dims});
        REQUIRE(array.cells.rank() == dims);
        CHECK(array.cells.dims()[0] == 9);
        for (int a = 1; a < dims; ++a) CHECK(array.cells.dims()[static_cast<std::size_t>(a)] == 9);
        for (int e : array.cells.data()) {
            CHECK(e >= 0);
            CHECK(e < 3);
        }
    }
}

TEST_CASE("k wraps mod m") {
    const auto base = bcpa::frank(3);
    const auto block = ternary_block();
    const auto at_k = bcpa::construct_nd<RootSequence>({base, block, 2, 3});
    CHECK(bcpa::construct_nd<RootSequence>({base, block, 11, 3}) == at_k);
    CHECK(bcpa::construct_nd<RootSequence>({base, block, -7, 3}) == at_k);
}

TEST_CASE("construction rejects bad parameters") {
    const auto base = bcpa::frank(2);
    const auto block = binary_block();
    CHECK_THROWS_AS(bcpa::construct_nd<RootSequence>({base, block, 0, 1}), bcpa::Error);
    // base over 3 roots against a block over 2 roots
    CHECK_THROWS_AS(
        bcpa::construct_nd<RootSequence>({RootSequence{3, {0, 0, 1, 2}}, block, 0, 2}),
        bcpa::DomainMismatchError);
}

TEST_CASE("strict mode names the failed precondition") {
    const RootSequence constant{2, {0, 0, 0, 0}};
    const auto block = binary_block();
    try {
        bcpa::construct_nd<RootSequence>({constant, block, 0, 2, true});
        FAIL("expected StrictModeError");
    } catch (const bcpa::StrictModeError& e) {
        CHECK(std::string(e.what()).find("not perfect") != std::string::npos);
    }
    // non-strict accepts the same input
    CHECK_NOTHROW(bcpa::construct_nd<RootSequence>({constant, block, 0, 2, false}));

    // block size that does not divide the base length
    const RootSequence f3 = bcpa::frank(3);
    const SequenceBlock<RootSequence> block2(
        {RootSequence{3, {0, 0, 0, 0}}, RootSequence{3, {0, 0, 0, 0}}});
    try {
        bcpa::construct_nd<RootSequence>({f3, block2, 0, 2, true});
        FAIL("expected StrictModeError");
    } catch (const bcpa::StrictModeError& e) {
        CHECK(std::string(e.what()).find("does not divide") != std::string::npos);
    }

    // with d = n every residue class is a single entry, so the orthogonality
    // sums cannot vanish even though the base is perfect
    const auto f2 = bcpa::frank(2);
    const SequenceBlock<RootSequence> block4({f2, f2, f2, f2});
    try {
        bcpa::construct_nd<RootSequence>({f2, block4, 0, 2, true});
        FAIL("expected StrictModeError");
    } catch (const bcpa::StrictModeError& e) {
        CHECK(std::string(e.what()).find("orthogonality") != std::string::npos);
    }

    // the stock parameter sets pass strict checks
    CHECK_NOTHROW(bcpa::construct_nd<RootSequence>({f3, ternary_block(), 1, 2, true}));
}

TEST_CASE("families") {
    const auto base = bcpa::frank(3);
    const auto block = ternary_block();

    const auto empty =
        bcpa::construct_family(base, block, std::vector<long long>{}, 4);
    CHECK(empty.members.empty());

    const std::vector<long long> twice{5, 5};
    const auto dup = bcpa::construct_family(base, block, twice, 3);
    REQUIRE(dup.members.size() == 2);
    CHECK(dup.members[0] == dup.members[1]);

    std::vector<long long> ks;
    for (long long k = 1; k <= 9; ++k) ks.push_back(k);
    const auto family = bcpa::construct_family(base, block, ks, 4);
    CHECK(family.d == 3);
    REQUIRE(family.members.size() == 9);
    for (const auto& member : family.members)
        CHECK(member.cells.dims() == std::vector<int>{9, 9, 9, 9});
}
