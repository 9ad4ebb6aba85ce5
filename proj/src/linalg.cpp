#include "kt/linalg.hpp"

namespace kt {

namespace {

long long inv_mod_p(long long a, long long p) {
  long long t = 0, newt = 1, r = p, newr = ((a % p) + p) % p;
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  internal_check(r == 1, "non-unit mod p");
  return ((t % p) + p) % p;
}

}  // namespace

GFpKernel::GFpKernel(long long p, int cols) : p_(p), cols_(cols) {}

void GFpKernel::add_row(const std::vector<long long>& row) {
  internal_check(static_cast<int>(row.size()) == cols_, "row width mismatch");
  if (p_ == 2) {
    const int words = (cols_ + 63) / 64;
    std::vector<std::uint64_t> r(words, 0);
    for (int c = 0; c < cols_; ++c)
      if (row[c] & 1) r[c >> 6] |= (std::uint64_t(1) << (c & 63));
    for (size_t i = 0; i < bitRows_.size(); ++i) {
      int pc = bitPivot_[i];
      if (r[pc >> 6] & (std::uint64_t(1) << (pc & 63)))
        for (int w = 0; w < words; ++w) r[w] ^= bitRows_[i][w];
    }
    int pivot = -1;
    for (int c = 0; c < cols_; ++c)
      if (r[c >> 6] & (std::uint64_t(1) << (c & 63))) {
        pivot = c;
        break;
      }
    if (pivot < 0) return;
    bitRows_.push_back(std::move(r));
    bitPivot_.push_back(pivot);
    ++rank_;
    return;
  }
  std::vector<long long> r(cols_);
  for (int c = 0; c < cols_; ++c) r[c] = ((row[c] % p_) + p_) % p_;
  for (size_t i = 0; i < rows_.size(); ++i) {
    int pc = pivot_[i];
    if (r[pc] == 0) continue;
    long long f = r[pc];
    for (int c = 0; c < cols_; ++c) r[c] = ((r[c] - f * rows_[i][c]) % p_ + p_) % p_;
  }
  int pivot = -1;
  for (int c = 0; c < cols_; ++c)
    if (r[c] != 0) {
      pivot = c;
      break;
    }
  if (pivot < 0) return;
  long long s = inv_mod_p(r[pivot], p_);
  for (int c = 0; c < cols_; ++c) r[c] = (r[c] * s) % p_;
  rows_.push_back(std::move(r));
  pivot_.push_back(pivot);
  ++rank_;
}

}  // namespace kt
