#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "severi/estimate.hpp"
#include "severi/symbolic.hpp"

namespace severi {

enum class CertStatus { EstimateOnly, OracleVerified, Empty };

struct ScanRow {
  long n = 0;
  long gamma = 0;
  long g = 0;
  std::string semigroup_id;
  std::vector<long> profile;
  CodimBreakdown estimate;
  long baseline = 0;
  bool excess = false;
  CertStatus status = CertStatus::EstimateOnly;
  bool conjectural = true;  // cleared only by an oracle certificate
  std::string note;
};

struct ScanOptions {
  long n_min = 3;
  long n_max = 7;
  long g_max = 40;
  bool certify = false;         // attempt certificates on excess rows
  std::uint64_t seed = 42;
  double row_budget_seconds = 120.0;
  int threads = 0;              // 0 = hardware concurrency
};

// Sweep the minimal-weight semigroups S*_{g,gamma} with profile
// (2*gamma+2, ..., 2*gamma+2n) over n in [n_min, n_max], gamma in [1, n-1],
// g in [2*gamma+1, g_max]. Rows ordered by (n, gamma, g).
std::vector<ScanRow> scan_minimal_weight(const ScanOptions& opts);

/// Staircase diagram of S in its g x g box. Column x holds the (x+1)-th
/// nonzero element of S; the path sits at height g - rho(s). Profile columns
/// carry k_i - i ramification cells from the bottom; ledger conditions and
/// sacrifice losses mark cells above the path.
struct DyckDiagram {
  long g = 0;
  std::vector<long> columns;      // first g nonzero elements of S
  std::vector<long> path_height;  // per column
  std::vector<long> ram_cells;    // per column counts
  std::vector<long> cond_cells;
  std::vector<long> corr_cells;
  long total_ram = 0;
  long total_cond = 0;
  long total_corr = 0;
};

DyckDiagram build_dyck(const NumericalSemigroup& S,
                       const RamificationProfile& p,
                       const ConditionLedger* ledger);

std::string render_dyck_ascii(const DyckDiagram& d);
std::string render_dyck_svg(const DyckDiagram& d);

}  // namespace severi
