#pragma once

#include <map>
#include <vector>

#include "severi/rational.hpp"

namespace severi {

// Incremental row reduction over Q with pivot = first nonzero entry.
// insert() reduces the row against the stored basis; a row that reduces to
// zero is dependent and is not stored.
class RowEchelon {
 public:
  // Returns true when the row was independent (added to the basis).
  bool insert(std::vector<Rat> row) {
    reduce(row);
    long p = first_nonzero(row);
    if (p < 0) return false;
    Rat inv = 1 / row[p];
    for (auto& x : row) x *= inv;
    rows_[p] = std::move(row);
    return true;
  }

  bool is_dependent(std::vector<Rat> row) const {
    reduce(row);
    return first_nonzero(row) < 0;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

  // Pivot columns in increasing order.
  std::vector<long> pivot_positions() const {
    std::vector<long> out;
    out.reserve(rows_.size());
    for (const auto& [p, r] : rows_) out.push_back(p);
    return out;
  }

 private:
  static long first_nonzero(const std::vector<Rat>& row) {
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) return static_cast<long>(j);
    return -1;
  }

  void reduce(std::vector<Rat>& row) const {
    for (const auto& [p, basis] : rows_) {
      if (static_cast<std::size_t>(p) >= row.size()) break;
      if (row[p] == 0) continue;
      Rat c = row[p];
      for (std::size_t j = p; j < row.size() && j < basis.size(); ++j)
        row[j] -= c * basis[j];
      row[p] = 0;
    }
  }

  std::map<long, std::vector<Rat>> rows_;  // pivot position -> normalized row
};

}  // namespace severi
