#include "pcgrp/voicing.hpp"

#include <algorithm>

#include "pcgrp/base.hpp"

namespace pcgrp {

Vec4 mat_apply(const Mat4& m, const Vec4& v) {
  Vec4 r{};
  for (int i = 0; i < 4; ++i) {
    long s = 0;
    for (int j = 0; j < 4; ++j) s += (long)m[i][j] * v[j];
    r[i] = mod((int)(s % 12), 12);
  }
  return r;
}

Mat4 mat_mul(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      long s = 0;
      for (int k = 0; k < 4; ++k) s += (long)a[i][k] * b[k][j];
      r[i][j] = mod((int)(s % 12), 12);
    }
  return r;
}

int det_mod12(const Mat4& m) {
  int idxs[4] = {0, 1, 2, 3};
  long d = 0;
  do {
    int sgn = 1;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (idxs[i] > idxs[j]) sgn = -sgn;
    long t = sgn;
    for (int i = 0; i < 4; ++i) t *= m[i][idxs[i]];
    d += t;
  } while (std::next_permutation(idxs, idxs + 4));
  return mod((int)(d % 12), 12);
}

bool in_sl4(const Mat4& m) { return det_mod12(m) == 1; }

int mat_order(const Mat4& m) {
  Mat4 id{};
  for (int i = 0; i < 4; ++i) id[i][i] = 1;
  Mat4 q = m;
  int k = 1;
  while (!(q == id)) {
    q = mat_mul(q, m);
    ++k;
    if (k > 10000) return -1;
  }
  return k;
}

Mat4 soprano_matrix() {
  return {{{8, 7, 3, 7}, {0, 1, 0, 0}, {0, 0, 1, 0}, {5, 5, 9, 6}}};
}

Mat4 alto_matrix() {
  return {{{11, 1, 10, 3}, {0, 1, 0, 0}, {2, 7, 3, 1}, {0, 0, 0, 1}}};
}

Mat4 tenor_matrix() {
  return {{{2, 1, 7, 3}, {11, 0, 5, 9}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
}

std::vector<Mat4> default_schedule() {
  Mat4 S = soprano_matrix(), A = alto_matrix(), T = tenor_matrix();
  return {S, S, A, A, A, T, T, T, S, S, S, A};
}

std::vector<Vec4> voicing_trace(const Vec4& start, const std::vector<Mat4>& schedule) {
  std::vector<Vec4> r{start};
  Vec4 v = start;
  for (const auto& m : schedule) {
    v = mat_apply(m, v);
    r.push_back(v);
  }
  return r;
}

int first_return_cycles(const Vec4& start, const std::vector<Mat4>& schedule,
                        int max_cycles) {
  Vec4 v = start;
  for (int loops = 1; loops <= max_cycles; ++loops) {
    for (const auto& m : schedule) v = mat_apply(m, v);
    if (v == start) return loops;
  }
  return -1;
}

std::set<int> vec_pcset(const Vec4& v) { return std::set<int>(v.begin(), v.end()); }

Mat4 pair_matrix(const SoprBassPair& p) {
  return {{{p.a[0], p.a[1], p.a[2], p.a[3]},
           {0, 1, 0, 0},
           {0, 0, 1, 0},
           {p.d[0], p.d[1], p.d[2], p.d[3]}}};
}

std::vector<std::pair<Vec4, Vec4>> sopr_step_pairs(int n_cycles) {
  std::vector<std::pair<Vec4, Vec4>> pairs;
  auto sched = default_schedule();
  Vec4 u = {4, 9, 0, 4};
  for (int cyc = 0; cyc < n_cycles; ++cyc)
    for (int k = 0; k < 12; ++k) {
      Vec4 in = u;
      u = mat_apply(sched[k], u);
      if (k == 0 || k == 1 || k == 8 || k == 9 || k == 10) pairs.push_back({in, u});
    }
  return pairs;
}

std::vector<std::pair<Vec4, Vec4>> transposition_closure(
    const std::vector<std::pair<Vec4, Vec4>>& pairs) {
  std::vector<std::pair<Vec4, Vec4>> r;
  for (const auto& [in, out] : pairs)
    for (int t = 0; t < 12; ++t) {
      Vec4 a, b;
      for (int q = 0; q < 4; ++q) {
        a[q] = mod(in[q] + t, 12);
        b[q] = mod(out[q] + t, 12);
      }
      r.push_back({a, b});
    }
  return r;
}

std::vector<SoprBassPair> soprano_bass_pairs(
    const std::vector<std::pair<Vec4, Vec4>>& constraints) {
  std::vector<Vec4> rowsA, rowsD;
  for (int a0 = 0; a0 < 12; ++a0)
    for (int a1 = 0; a1 < 12; ++a1)
      for (int a2 = 0; a2 < 12; ++a2)
        for (int a3 = 0; a3 < 12; ++a3) {
          Vec4 r = {a0, a1, a2, a3};
          bool okA = true, okD = true;
          for (const auto& [in, out] : constraints) {
            long s = 0;
            for (int t = 0; t < 4; ++t) s += (long)r[t] * in[t];
            int sv = mod((int)(s % 12), 12);
            if (sv != out[0]) okA = false;
            if (sv != out[3]) okD = false;
            if (!okA && !okD) break;
          }
          if (okA) rowsA.push_back(r);
          if (okD) rowsD.push_back(r);
        }
  std::vector<SoprBassPair> fam;
  for (const auto& a : rowsA)
    for (const auto& d : rowsD)
      if (mod(a[0] * d[3] - a[3] * d[0], 12) == 1) fam.push_back({a, d});
  std::sort(fam.begin(), fam.end());
  return fam;
}

std::vector<SoprBassPair> enumerate_soprano_bass_family() {
  return soprano_bass_pairs(transposition_closure(sopr_step_pairs(1)));
}

long sl2_z12_count() {
  long n = 0;
  for (int a = 0; a < 12; ++a)
    for (int b = 0; b < 12; ++b)
      for (int c = 0; c < 12; ++c)
        for (int d = 0; d < 12; ++d)
          if (mod(a * d - b * c, 12) == 1) ++n;
  return n;
}

long unconstrained_family_count() { return sl2_z12_count() * 144L * 144L; }

}  // namespace pcgrp
