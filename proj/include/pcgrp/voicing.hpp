#pragma once
// 4x4 matrices over Z12 acting on (bass, tenor, alto, soprano) columns,
// plus the constrained two-free-row family enumeration.
#include <array>
#include <set>
#include <vector>

namespace pcgrp {

using Vec4 = std::array<int, 4>;
using Mat4 = std::array<std::array<int, 4>, 4>;

Vec4 mat_apply(const Mat4& m, const Vec4& v);
Mat4 mat_mul(const Mat4& a, const Mat4& b);

// Signed permutation expansion over the integers, reduced mod 12 last.
int det_mod12(const Mat4& m);
bool in_sl4(const Mat4& m);

// Multiplicative order; -1 beyond 10000.
int mat_order(const Mat4& m);

// The three voice-raising matrices: each fixes the other voices' rows.
Mat4 soprano_matrix();
Mat4 alto_matrix();
Mat4 tenor_matrix();

// soprano x2, alto x3, tenor x3, soprano x3, alto x1.
std::vector<Mat4> default_schedule();

// start followed by one image per schedule step.
std::vector<Vec4> voicing_trace(const Vec4& start, const std::vector<Mat4>& schedule);

// Whole-schedule passes until the exact start vector recurs; -1 if never
// within max_cycles.
int first_return_cycles(const Vec4& start, const std::vector<Mat4>& schedule,
                        int max_cycles = 1000);

std::set<int> vec_pcset(const Vec4& v);

// Rows 1 and 4 of a matrix whose middle rows are the identity's.
struct SoprBassPair {
  Vec4 a{}, d{};
  bool operator<(const SoprBassPair& o) const {
    return a != o.a ? a < o.a : d < o.d;
  }
  bool operator==(const SoprBassPair& o) const { return a == o.a && d == o.d; }
};

Mat4 pair_matrix(const SoprBassPair& p);

// (input, output) vectors at the soprano-raising positions of n_cycles
// passes of the default schedule from (4,9,0,4).
std::vector<std::pair<Vec4, Vec4>> sopr_step_pairs(int n_cycles);

// Every constraint pair shifted by all twelve transpositions.
std::vector<std::pair<Vec4, Vec4>> transposition_closure(
    const std::vector<std::pair<Vec4, Vec4>>& pairs);

// All (row1, row4) pairs with row1.in = out_bass and row4.in = out_soprano
// for every constraint, filtered to unit corner determinant
// a[0]*d[3] - a[3]*d[0] = 1, sorted lexicographically.
std::vector<SoprBassPair> soprano_bass_pairs(
    const std::vector<std::pair<Vec4, Vec4>>& constraints);

// soprano_bass_pairs over the transposition closure of one schedule pass.
std::vector<SoprBassPair> enumerate_soprano_bass_family();

long sl2_z12_count();
long unconstrained_family_count();  // |SL2(Z12)| * 12^4 * 12^4

}  // namespace pcgrp
