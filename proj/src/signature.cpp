#include "stec/signature.hpp"

namespace stec {

namespace {

// Merges two sorted runs, counting inversions (pairs taken from the right run
// while the left run is non-empty). Returns -1 on a duplicate value.
long long merge_runs(std::vector<int>& v, std::vector<int>& tmp, std::size_t lo,
                     std::size_t mid, std::size_t hi) {
  long long inversions = 0;
  std::size_t i = lo, j = mid, out = lo;
  while (i < mid && j < hi) {
    if (v[i] == v[j]) return -1;
    if (v[i] < v[j]) {
      tmp[out++] = v[i++];
    } else {
      inversions += static_cast<long long>(mid - i);
      tmp[out++] = v[j++];
    }
  }
  while (i < mid) tmp[out++] = v[i++];
  while (j < hi) tmp[out++] = v[j++];
  for (std::size_t p = lo; p < hi; ++p) v[p] = tmp[p];
  return inversions;
}

long long sort_count_rec(std::vector<int>& v, std::vector<int>& tmp, std::size_t lo,
                         std::size_t hi) {
  if (hi - lo < 2) return 0;
  std::size_t mid = lo + (hi - lo) / 2;
  long long left = sort_count_rec(v, tmp, lo, mid);
  if (left < 0) return -1;
  long long right = sort_count_rec(v, tmp, mid, hi);
  if (right < 0) return -1;
  long long merged = merge_runs(v, tmp, lo, mid, hi);
  if (merged < 0) return -1;
  return left + right + merged;
}

}  // namespace

SortedInts sort_with_parity(std::span<const int> seq) {
  SortedInts out;
  out.values.assign(seq.begin(), seq.end());
  std::vector<int> tmp(out.values.size());
  long long inversions = sort_count_rec(out.values, tmp, 0, out.values.size());
  if (inversions < 0) {
    out.values.clear();
    out.sign = 0;
  } else {
    out.sign = (inversions & 1) ? -1 : +1;
  }
  return out;
}

}  // namespace stec
