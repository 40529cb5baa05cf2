#pragma once

// Reference values the suites check against. kBinary4D is indexed
// [j][i0][i1][i2]; kQuat16Rows holds row j of the 16x16 quaternion array in
// token form, axis 0 = j, axis 1 = i0.

namespace golden {

inline constexpr int kFrank3[9] = {0, 0, 0, 0, 1, 2, 0, 2, 1};

inline constexpr int kBinary4D[4][4][4][4] = {
    {
        {{0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 1}, {1, 1, 1, 0}},
        {{0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 1}, {1, 1, 1, 0}},
        {{0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 1}, {1, 1, 1, 0}},
        {{1, 1, 1, 0}, {1, 1, 1, 0}, {1, 1, 1, 0}, {0, 0, 0, 1}},
    },
    {
        {{0, 1, 0, 0}, {1, 0, 1, 1}, {0, 1, 0, 0}, {0, 1, 0, 0}},
        {{1, 0, 1, 1}, {0, 1, 0, 0}, {1, 0, 1, 1}, {1, 0, 1, 1}},
        {{0, 1, 0, 0}, {1, 0, 1, 1}, {0, 1, 0, 0}, {0, 1, 0, 0}},
        {{0, 1, 0, 0}, {1, 0, 1, 1}, {0, 1, 0, 0}, {0, 1, 0, 0}},
    },
    {
        {{0, 1, 0, 0}, {1, 0, 1, 1}, {0, 1, 0, 0}, {0, 1, 0, 0}},
        {{1, 0, 1, 1}, {0, 1, 0, 0}, {1, 0, 1, 1}, {1, 0, 1, 1}},
        {{0, 1, 0, 0}, {1, 0, 1, 1}, {0, 1, 0, 0}, {0, 1, 0, 0}},
        {{0, 1, 0, 0}, {1, 0, 1, 1}, {0, 1, 0, 0}, {0, 1, 0, 0}},
    },
    {
        {{1, 1, 1, 0}, {1, 1, 1, 0}, {1, 1, 1, 0}, {0, 0, 0, 1}},
        {{1, 1, 1, 0}, {1, 1, 1, 0}, {1, 1, 1, 0}, {0, 0, 0, 1}},
        {{1, 1, 1, 0}, {1, 1, 1, 0}, {1, 1, 1, 0}, {0, 0, 0, 1}},
        {{0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 1}, {1, 1, 1, 0}},
    },
};

inline constexpr const char* kQ16Tokens =
    "1,k,1,-k,-i,-k,i,-k,-1,k,-1,-k,i,-k,-i,-k";

inline constexpr const char* kQuat16Rows[16] = {
    "1,k,1,-k,-i,-k,i,-k,-1,k,-1,-k,i,-k,-i,-k",
    "k,1,j,-1,j,1,k,1,-k,1,-j,-1,-j,1,-k,1",
    "-i,-k,1,k,1,-k,-i,-k,i,-k,-1,k,-1,-k,i,-k",
    "-k,1,-k,-1,j,-1,-j,-1,k,1,k,-1,-j,-1,j,-1",
    "-1,-j,1,-j,i,j,i,-j,1,-j,-1,-j,-i,j,-i,-j",
    "-j,-1,-k,-1,k,-1,j,1,j,-1,k,-1,-k,-1,-j,1",
    "i,j,1,j,-1,j,-i,-j,-i,j,-1,j,1,j,i,-j",
    "j,-1,-j,-1,k,1,k,-1,-j,-1,j,-1,-k,1,-k,-1",
    "1,-k,1,k,-i,k,i,k,-1,-k,-1,k,i,k,-i,k",
    "-k,1,-j,-1,-j,1,-k,1,k,1,j,-1,j,1,k,1",
    "-i,k,1,-k,1,k,-i,k,i,k,-1,-k,-1,k,i,k",
    "k,1,k,-1,-j,-1,j,-1,-k,1,-k,-1,j,-1,-j,-1",
    "-1,j,1,j,i,-j,i,j,1,j,-1,j,-i,-j,-i,j",
    "j,-1,k,-1,-k,-1,-j,1,-j,-1,-k,-1,k,-1,j,1",
    "i,-j,1,-j,-1,-j,-i,j,-i,-j,-1,-j,1,-j,i,j",
    "-j,-1,j,-1,-k,1,-k,-1,j,-1,-j,-1,k,1,k,-1",
};

// Non-zero cross-correlation values of the k=1 / k=2 pair of the 9-member
// 4-dimensional family over 3 roots: {re, im, multiplicity}.
inline constexpr double kFamilyPairValues[3][3] = {
    {2187.0, 0.0, 5},
    {-1093.5, -1894.0, 2},
    {-1093.5, 1894.0, 2},
};

}  // namespace golden
