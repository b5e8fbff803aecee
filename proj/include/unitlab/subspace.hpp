#pragma once

#include <cstdint>
#include <vector>

#include "unitlab/errors.hpp"

namespace unitlab {

// A subspace of F_p^width kept as a reduced row echelon basis. Insertion,
// rank and membership are exact residue arithmetic; no fraction-free or
// modular tricks are needed at this scale.
class Subspace {
 public:
  Subspace(int p, int width) : p_(p), width_(width) {}

  int p() const { return p_; }
  int width() const { return width_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<uint8_t>>& basis() const { return rows_; }

  // Reduces the row against the basis; inserts the residual if nonzero.
  // Returns true when the dimension grew.
  bool insert(std::vector<uint8_t> row);

  bool contains(const std::vector<uint8_t>& v) const;

  // Residual of v after eliminating all pivot columns.
  std::vector<uint8_t> reduce(std::vector<uint8_t> v) const;

  bool same_space(const Subspace& other) const;

 private:
  int inverse_mod_p(int a) const;

  int p_;
  int width_;
  std::vector<std::vector<uint8_t>> rows_;  // RREF, ordered by pivot column
  std::vector<int> pivots_;
};

// Nullspace basis of the stacked constraint rows (each of length width),
// returned as a Subspace. Plain Gauss-Jordan over F_p.
Subspace nullspace(int p, int width, const std::vector<std::vector<uint8_t>>& constraints);

}  // namespace unitlab
