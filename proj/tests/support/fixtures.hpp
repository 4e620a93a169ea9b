#pragma once

// Frozen formulas found by seeded searches. The search that produced each
// one is noted so it can be rerun.

#include <vector>

namespace bnrsat::testing {

// First Bad hit of degree3 mode at n = 30: seed 0. Holds (3,3)-, (3,4)- and
// (4,3)-literals, so Bad-1 applies.
inline const std::vector<std::vector<int>> kBadMixed = {
    {-3, 8, 15},    {-3, -5, 9},    {9, 15, 26},    {7, 9, 18},     {-11, -16, -28}, {-3, 10, -24},
    {8, -20, -24},  {-20, 27, -28}, {-3, -16, 26},  {-1, 7, 10},    {10, -12, -16},  {-1, -5, 26},
    {-4, 10, 27},   {9, -11, 27},   {-1, -11, 18},  {-4, 7, -20},   {-1, 15, -20},   {7, 8, -16},
    {-4, 26, -28},  {-11, -12, 15}, {-5, -12, 18},  {-5, -24, -28}, {8, 18, 27},     {-4, -12, -24},
    {-6, 13, 19},   {5, 20, -21},   {14, -15, 16},  {6, 25, -29},   {4, 29, -30},    {3, -8, 23},
    {4, -8, -29},   {-21, -22, -26}, {6, -8, -27},  {-2, -14, 25},  {2, -10, 23},    {-9, -13, 28},
    {-21, 24, 28},  {-2, -15, 22},  {3, -10, 21},   {-2, 11, -19},  {-14, -18, -23}, {1, 2, 21},
    {3, 19, 30},    {1, 16, -18},   {-18, -26, 29}, {13, 22, -29},  {-15, -19, 30},  {-13, 14, -17},
    {11, 20, -30},  {6, 12, -30},   {4, -23, 28},   {-10, 16, -25}, {2, 20, 30},     {14, 24, -27},
    {-7, 25, 29},   {11, 12, -22},  {-6, -9, 23},   {-13, -23, -27}, {5, 17, -22},   {-7, 13, -17},
    {5, -14, -25},  {-7, 17, -19},  {1, -17, 19},   {-9, 12, 22},   {17, -25, -26},  {-6, 21, 24},
};

// Every literal a (3,3)-literal, no coincident pair, no 2-clause: random
// partitions of three copies of each literal over 12 variables, std::mt19937
// seeded with 1, first hit at draw 34228.
inline const std::vector<std::vector<int>> kBadUniform33 = {
    {-11, 1, 7},  {8, 5, 6},    {4, -11, 6},  {8, -4, -12}, {12, -3, 7},  {10, -11, -1},
    {-1, -4, -10}, {-5, -12, -8}, {-9, -10, 2}, {-1, 2, 3},   {-6, -4, -2}, {1, -5, 2},
    {5, -7, 4},   {-3, -9, -7}, {4, -8, -6},  {10, 12, -2}, {11, 10, -6}, {-8, 6, 12},
    {-5, 11, -3}, {9, 7, -12},  {9, 3, -10},  {8, 3, -9},   {5, -2, 11},  {-7, 9, 1},
};

// Reduced Good formula where branching on 3 (a (3,4)-literal sharing a clause
// with the (2,4)-literal -2) must remove at least four clauses when 3 := 1.
// Removing only three exposed a (2,2) resolution running ahead of a (1,b) one.
inline const std::vector<std::vector<int>> kGood21Regression = {
    {-2, 3, 6},   {-1, 3},      {-1, 6},        {3, -9},         {6, -9},       {-1, -2, -9},
    {1, 5, 11},   {4, -10, -13}, {-6, 10, 13},  {-4, -5, 13},    {-4, 5, -11},  {-3, 5, 9},
    {-5, 10, -13}, {1, -3, 10}, {-4, -10, 11},  {2, 9, -13},     {2, 4, 11},    {2, -3, 4, 13},
    {2, -3, 4, -6, -11},
};

}  // namespace bnrsat::testing
