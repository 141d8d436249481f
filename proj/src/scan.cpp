#include "severi/scan.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace severi {

namespace {

struct Cell {
  long n, gamma, g;
};

ScanRow scan_cell(const Cell& cell, const ScanOptions& opts) {
  ScanRow row;
  row.n = cell.n;
  row.gamma = cell.gamma;
  row.g = cell.g;
  auto S = min_weight_gamma_semigroup(cell.g, cell.gamma);
  row.semigroup_id = S.id();
  std::vector<long> entries;
  for (long j = 1; j <= cell.n; ++j) entries.push_back(2 * cell.gamma + 2 * j);
  row.profile = entries;

  if (cell.n <= cell.gamma) {  // no s in [2g'+2n+2, 4g'+2] is realizable
    row.status = CertStatus::Empty;
    row.note = "stratum empty";
    return row;
  }
  auto profile = RamificationProfile::of(entries);
  row.estimate = estimate_codimension(S, profile);
  row.baseline = row.estimate.baseline;
  row.excess = row.estimate.excess;

  if (opts.certify && row.excess) {
    Budget budget{std::chrono::steady_clock::now() +
                  std::chrono::milliseconds(
                      static_cast<long>(opts.row_budget_seconds * 1000))};
    try {
      Certificate cert = certify_stratum(S, profile, opts.seed, &budget);
      if (cert.exact) {
        row.status = CertStatus::OracleVerified;
        row.conjectural = false;
        row.estimate.conjectural_exact = false;
        if (cert.codimension != row.estimate.total) {
          std::ostringstream os;
          os << "oracle codimension " << cert.codimension
             << " differs from estimate " << row.estimate.total;
          row.note = os.str();
        }
      } else {
        row.note = cert.status;
      }
    } catch (const BudgetExceeded&) {
      row.note = "certification skipped: row time budget exceeded";
    } catch (const std::exception& e) {
      row.note = std::string("certification failed: ") + e.what();
    }
  }
  return row;
}

}  // namespace

std::vector<ScanRow> scan_minimal_weight(const ScanOptions& opts) {
  std::vector<Cell> cells;
  for (long n = std::max<long>(3, opts.n_min);
       n <= std::min<long>(7, opts.n_max); ++n)
    for (long gamma = 1; gamma <= n - 1; ++gamma)
      for (long g = 2 * gamma + 1; g <= opts.g_max; ++g)
        cells.push_back({n, gamma, g});

  std::vector<ScanRow> rows(cells.size());
  unsigned workers = opts.threads > 0
                         ? static_cast<unsigned>(opts.threads)
                         : std::max(1u, std::thread::hardware_concurrency());
  unsigned ncells = static_cast<unsigned>(cells.size());
  workers = std::min(workers, std::max(1u, ncells));

  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) break;
      rows[i] = scan_cell(cells[i], opts);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return rows;
}

DyckDiagram build_dyck(const NumericalSemigroup& S,
                       const RamificationProfile& p,
                       const ConditionLedger* ledger) {
  require_profile_in(S, p);
  DyckDiagram d;
  d.g = S.genus();
  for (long v = 1; static_cast<long>(d.columns.size()) < d.g; ++v)
    if (S.contains(v)) d.columns.push_back(v);

  const long g = d.g;
  d.path_height.assign(d.columns.size(), 0);
  d.ram_cells.assign(d.columns.size(), 0);
  d.cond_cells.assign(d.columns.size(), 0);
  d.corr_cells.assign(d.columns.size(), 0);

  auto column_of = [&](long s) -> long {
    auto it = std::lower_bound(d.columns.begin(), d.columns.end(), s);
    if (it == d.columns.end() || *it != s) return -1;
    return it - d.columns.begin();
  };

  for (std::size_t x = 0; x < d.columns.size(); ++x)
    d.path_height[x] = g - S.rho(d.columns[x]);

  for (long i = 0; i < p.n(); ++i) {
    long x = column_of(p.k[i]);
    long cells = p.k[i] - (i + 1);
    d.total_ram += cells;
    if (x >= 0) d.ram_cells[x] = cells;
  }

  if (ledger) {
    for (const auto& cond : ledger->entries) {
      long x = column_of(cond.column_s);
      if (x >= 0) ++d.cond_cells[x];
      ++d.total_cond;
    }
    for (const auto& walk : ledger->walks) {
      if (!walk.sacrificed) continue;
      long lost = S.rho(walk.sacrifice_valuation);
      long x = column_of(walk.column_s);
      if (x >= 0) d.corr_cells[x] += lost;
      d.total_corr += lost;
    }
  }
  return d;
}

std::string render_dyck_ascii(const DyckDiagram& d) {
  std::ostringstream os;
  const long g = d.g;
  if (g == 0) {
    os << "(empty diagram: genus 0)\n";
    return os.str();
  }
  // Top row first. Below the path: '#' ramification, '.' plain; above:
  // 'C' condition, 'x' non-contributing correction, ' ' unmarked.
  for (long y = g - 1; y >= 0; --y) {
    for (std::size_t x = 0; x < d.columns.size(); ++x) {
      long h = d.path_height[x];
      char ch;
      if (y < h) {
        ch = (y < d.ram_cells[x]) ? '#' : '.';
      } else {
        long above = y - h;
        if (above < d.cond_cells[x]) ch = 'C';
        else if (above < d.cond_cells[x] + d.corr_cells[x]) ch = 'x';
        else ch = ' ';
      }
      os << ch;
    }
    os << '\n';
  }
  os << "columns:";
  for (long s : d.columns) os << ' ' << s;
  os << "\n# ramification cells: " << d.total_ram
     << ", C condition cells: " << d.total_cond
     << ", x correction cells: " << d.total_corr << "\n";
  return os.str();
}

std::string render_dyck_svg(const DyckDiagram& d) {
  const long g = d.g;
  const long cell = 20;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
     << std::max<long>(g, 1) * cell + 2 << "\" height=\""
     << std::max<long>(g, 1) * cell + 2 << "\">\n";
  auto rect = [&](long x, long y, const char* fill) {
    // y counted from the bottom of the box.
    os << "  <rect x=\"" << 1 + x * cell << "\" y=\"" << 1 + (g - 1 - y) * cell
       << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\""
       << fill << "\" stroke=\"#4060a0\" stroke-width=\"0.5\"/>\n";
  };
  for (std::size_t x = 0; x < d.columns.size(); ++x) {
    long h = d.path_height[x];
    for (long y = 0; y < g; ++y) {
      const char* fill = "none";
      if (y < h) fill = (y < d.ram_cells[x]) ? "#c8c8c8" : "#f2f2f2";
      else {
        long above = y - h;
        if (above < d.cond_cells[x]) fill = "#d83030";
        else if (above < d.cond_cells[x] + d.corr_cells[x]) fill = "#703080";
      }
      rect(x, y, fill);
    }
  }
  // Staircase path.
  os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (std::size_t x = 0; x < d.columns.size(); ++x) {
    long h = d.path_height[x];
    os << 1 + static_cast<long>(x) * cell << "," << 1 + (g - h) * cell << " "
       << 1 + static_cast<long>(x + 1) * cell << "," << 1 + (g - h) * cell
       << " ";
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

}  // namespace severi
