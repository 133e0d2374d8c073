#pragma once
// Expected values frozen from hand derivations and earlier verified runs.

#include <string>
#include <vector>

namespace frozen {

// Goncharov quotient dimensions d_1..d_6 (verified against the Hall oracle).
inline const std::vector<int> kDimsT2S3S5 = {1, 0, 1, 1, 2, 2};
inline const std::vector<int> kDimsT2T3 = {2, 1, 2, 3, 4, 5};
inline const std::vector<int> kDimsT2T3S3S5 = {2, 1, 3, 5, 8, 11};

// Image ideals of the cocycle evaluation map.
inline const std::vector<std::string> kIdealT2Depth2 = {"Li2 - 1/2*log*Li1"};
inline const std::vector<std::string> kIdealEmptyDepth2 = {"log", "Li1", "Li2"};
inline const std::vector<std::string> kIdealT2Depth4 = {
    "Li2 - 1/2*log*Li1",
    "f:t2*f:s3*Li4 - f:t2.s3*log*Li3 + 1/6*f:t2.s3*log^3*Li1 - 1/24*f:t2*f:s3*log^3*Li1"};

// Basis for receding Z with q_s = 2 up to weight 4 (p = 5, q_M = 3).
inline const std::vector<std::string> kBasisQs2Depth4 = {
    "log(2)", "log(3)", "Li2(-2)", "zeta(3)", "Li3(-2)", "Li3(-3)",
    "Li4(-2)", "Li4(1/2)", "Li4(-3)", "Li4(1/3)", "Li4(2/3)"};

}  // namespace frozen
