#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace wminus {

// Coefficient table of the bigraded series prod_{r>=0} prod_{k>0}
// 1/(1 - t^{2r+1} q^k), truncated to a rectangle.  Keys are (rank, dot).
// side = +1 keys ranks positively, side = -1 mirrors them (the two series of
// the raising/lowering halves agree up to r <-> -r).
using DimTable = std::map<std::pair<int64_t, int64_t>, int64_t>;

DimTable series_coefficients(int64_t max_r, int64_t max_k, int side = +1);

// Number of multisets of pairs (a odd >= 1, b >= 1) with sum a = r, sum b = k;
// independent brute-force oracle for the series coefficients.
int64_t multiset_generator_count(int64_t r, int64_t k);

int64_t odd_partition_count(int64_t n);
int64_t distinct_partition_count(int64_t n);

std::string render_table(const DimTable& t, int64_t max_r, int64_t max_k);

}  // namespace wminus
