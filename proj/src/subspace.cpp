#include "unitlab/subspace.hpp"

#include <algorithm>

namespace unitlab {

int Subspace::inverse_mod_p(int a) const {
  // p is prime and small; Fermat by iteration.
  int r = 1;
  for (int e = 0; e < p_ - 2; ++e) r = (r * a) % p_;
  return r;
}

std::vector<uint8_t> Subspace::reduce(std::vector<uint8_t> v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    int c = pivots_[r];
    int coef = v[c];
    if (coef == 0) continue;
    for (int j = 0; j < width_; ++j)
      v[j] = static_cast<uint8_t>((v[j] + (p_ - coef) * rows_[r][j]) % p_);
  }
  return v;
}

bool Subspace::insert(std::vector<uint8_t> row) {
  row = reduce(std::move(row));
  int pivot = -1;
  for (int j = 0; j < width_; ++j)
    if (row[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;
  int scale = inverse_mod_p(row[pivot]);
  for (int j = 0; j < width_; ++j) row[j] = static_cast<uint8_t>((row[j] * scale) % p_);
  // Eliminate the new pivot column from existing rows, keep rows pivot-sorted.
  for (size_t r = 0; r < rows_.size(); ++r) {
    int coef = rows_[r][pivot];
    if (coef == 0) continue;
    for (int j = 0; j < width_; ++j)
      rows_[r][j] = static_cast<uint8_t>((rows_[r][j] + (p_ - coef) * row[j]) % p_);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  size_t idx = static_cast<size_t>(pos - pivots_.begin());
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + idx, std::move(row));
  return true;
}

bool Subspace::contains(const std::vector<uint8_t>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](uint8_t x) { return x == 0; });
}

bool Subspace::same_space(const Subspace& other) const {
  if (dim() != other.dim() || width_ != other.width_) return false;
  for (const auto& row : other.rows_)
    if (!contains(row)) return false;
  return true;
}

Subspace nullspace(int p, int width, const std::vector<std::vector<uint8_t>>& constraints) {
  Subspace row_space(p, width);
  for (const auto& c : constraints) row_space.insert(c);
  // Free columns parameterize the nullspace.
  std::vector<int> pivot_row(width, -1);
  const auto& rows = row_space.basis();
  for (int r = 0; r < row_space.dim(); ++r) {
    for (int j = 0; j < width; ++j)
      if (rows[r][j] != 0) {
        pivot_row[j] = r;
        break;
      }
  }
  Subspace result(p, width);
  for (int j = 0; j < width; ++j) {
    if (pivot_row[j] >= 0) continue;
    std::vector<uint8_t> v(width, 0);
    v[j] = 1;
    for (int c = 0; c < width; ++c)
      if (pivot_row[c] >= 0) v[c] = static_cast<uint8_t>((p - rows[pivot_row[c]][j] % p) % p);
    result.insert(std::move(v));
  }
  return result;
}

}  // namespace unitlab
