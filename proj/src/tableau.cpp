#include "qschur/tableau.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qschur {

Tableau::Tableau(std::vector<std::vector<Entry>> r) : rows(std::move(r)) {
  std::vector<int> parts;
  for (const auto& row : rows) {
    if (row.empty()) throw std::invalid_argument("empty tableau row");
    for (const Entry& e : row)
      if (e.value < 1) throw std::invalid_argument("entry values must be >= 1");
    parts.push_back(static_cast<int>(row.size()));
  }
  shape = Composition(std::move(parts));
}

bool Tableau::has_marks() const {
  for (const auto& row : rows)
    for (const Entry& e : row)
      if (e.marked) return true;
  return false;
}

namespace {

int max_value(const Tableau& t) {
  int m = 0;
  for (const auto& row : t.rows)
    for (const Entry& e : row) m = std::max(m, e.value);
  return m;
}

// For every k, the cells with entries <= k (marked-alphabet order) must form
// the left-justified diagram of a peak composition.
bool prefix_shapes_ok(const Tableau& t) {
  for (int k = 1; k <= max_value(t); ++k) {
    std::vector<int> counts;
    for (const auto& row : t.rows) {
      int c = 0;
      while (c < static_cast<int>(row.size()) && row[c].key() <= 2 * k) ++c;
      // left-justified: nothing <= k may appear past the first gap
      for (int j = c; j < static_cast<int>(row.size()); ++j)
        if (row[j].key() <= 2 * k) return false;
      counts.push_back(c);
    }
    int top = 0;
    while (top < static_cast<int>(counts.size()) && counts[top] > 0) ++top;
    for (int i = top; i < static_cast<int>(counts.size()); ++i)
      if (counts[i] > 0) return false;
    for (int i = 0; i + 1 < top; ++i)
      if (counts[i] < 2) return false;
  }
  return true;
}

}  // namespace

bool is_pct(const Tableau& t) {
  if (t.has_marks()) throw std::invalid_argument("is_pct rejects marked entries");
  for (const auto& row : t.rows)
    for (size_t c = 1; c < row.size(); ++c)
      if (row[c].value < row[c - 1].value) return false;
  for (size_t r = 1; r < t.rows.size(); ++r)
    if (t.rows[r][0].value <= t.rows[r - 1][0].value) return false;
  return prefix_shapes_ok(t);
}

bool is_mpct(const Tableau& t) {
  for (const auto& row : t.rows)
    for (size_t c = 1; c < row.size(); ++c) {
      if (row[c].key() < row[c - 1].key()) return false;
      if (row[c] == row[c - 1] && row[c].marked) return false;  // repeated i'
    }
  for (size_t r = 1; r < t.rows.size(); ++r)
    if (t.rows[r][0].key() <= t.rows[r - 1][0].key()) return false;
  if (!prefix_shapes_ok(t)) return false;
  // first-column adjacency: unprimed i to the right forbids i or i' below
  for (size_t r = 0; r + 1 < t.rows.size(); ++r) {
    if (t.rows[r].size() < 2) continue;
    const Entry& right = t.rows[r][1];
    if (!right.marked && t.rows[r + 1][0].value == right.value) return false;
  }
  return true;
}

Composition weight(const Tableau& t) {
  int m = max_value(t);
  std::vector<int> counts(m, 0);
  for (const auto& row : t.rows)
    for (const Entry& e : row) ++counts[e.value - 1];
  for (int c : counts)
    if (c == 0) throw std::invalid_argument("weight is weak: a value is skipped");
  return Composition(std::move(counts));
}

std::vector<Tableau> enumerate_pct(const Composition& alpha) {
  if (!is_peak_composition(alpha))
    throw std::invalid_argument("enumerate_pct requires a peak composition");
  const int nrows = alpha.length();
  std::vector<std::vector<Entry>> grid(nrows);
  for (int i = 0; i < nrows; ++i) grid[i].resize(alpha.parts[i]);
  std::vector<int> filled(nrows, 0);
  int remaining = alpha.size();
  std::vector<Tableau> out;

  auto prefix_ok = [&]() {
    int top = 0;
    while (top < nrows && filled[top] > 0) ++top;
    for (int i = 0; i + 1 < top; ++i)
      if (filled[i] < 2) return false;
    return top > 0;
  };

  std::function<void(int)> step;
  // Extension counts for value k, chosen row by row. At most one unstarted
  // row may start per value (first column strictly increases), and it must
  // be the topmost unstarted one.
  std::function<void(int, int, bool, bool)> choose = [&](int k, int row,
                                                         bool any,
                                                         bool started_new) {
    if (row == nrows) {
      if (!any || !prefix_ok()) return;
      if (remaining == 0)
        out.emplace_back(grid);
      else
        step(k + 1);
      return;
    }
    bool started = filled[row] > 0;
    bool topmost_unstarted =
        !started && !started_new && (row == 0 || filled[row - 1] > 0);
    int max_ext = (started || topmost_unstarted)
                      ? alpha.parts[row] - filled[row]
                      : 0;
    for (int e = 0; e <= max_ext; ++e) {
      if (e > 0)
        for (int c = 0; c < e; ++c) grid[row][filled[row] + c] = unmarked(k);
      filled[row] += e;
      remaining -= e;
      choose(k, row + 1, any || e > 0, started_new || (!started && e > 0));
      filled[row] -= e;
      remaining += e;
    }
  };
  step = [&](int k) { choose(k, 0, false, false); };
  step(1);
  return out;
}

std::pair<int, int> stats_pm(const Tableau& t) {
  if (!is_pct(t)) throw std::invalid_argument("stats_pm requires a PCT");
  int p = 0;
  for (const auto& row : t.rows) {
    int distinct = 1;
    for (size_t c = 1; c < row.size(); ++c)
      if (row[c].value != row[c - 1].value) ++distinct;
    p += distinct - 1;
  }
  int m = 0;
  for (size_t r = 0; r + 1 < t.rows.size(); ++r)
    if (t.rows[r].size() >= 2 &&
        t.rows[r][1].value == t.rows[r + 1][0].value)
      ++m;
  return {p, m};
}

std::vector<Tableau> markings_of(const Tableau& t, bool star) {
  if (!is_pct(t)) throw std::invalid_argument("markings_of requires a PCT");
  const int nrows = static_cast<int>(t.rows.size());
  // Candidates: the leftmost cell of each value within a row, off the first
  // column. The mark is forced when the cell sits right of a first-column
  // cell whose below neighbour carries the same value (condition 4).
  std::vector<std::pair<int, int>> free_cells;
  std::vector<std::pair<int, int>> forced_cells;
  for (int r = 0; r < nrows; ++r) {
    const auto& row = t.rows[r];
    for (int c = 1; c < static_cast<int>(row.size()); ++c) {
      if (row[c].value == row[c - 1].value) continue;
      bool forced = c == 1 && r + 1 < nrows &&
                    t.rows[r + 1][0].value == row[c].value;
      (forced ? forced_cells : free_cells).push_back({r, c});
    }
  }
  std::vector<Tableau> star_markings;
  for (unsigned mask = 0; mask < (1u << free_cells.size()); ++mask) {
    Tableau m = t;
    for (auto [r, c] : forced_cells) m.rows[r][c].marked = true;
    for (size_t i = 0; i < free_cells.size(); ++i)
      if (mask & (1u << i)) {
        auto [r, c] = free_cells[i];
        m.rows[r][c].marked = true;
      }
    star_markings.push_back(std::move(m));
  }
  if (star) return star_markings;
  // First-column marks are independent of all conditions.
  std::vector<Tableau> out;
  for (const Tableau& m : star_markings)
    for (unsigned mask = 0; mask < (1u << nrows); ++mask) {
      Tableau full = m;
      for (int r = 0; r < nrows; ++r)
        if (mask & (1u << r)) full.rows[r][0].marked = true;
      out.push_back(std::move(full));
    }
  return out;
}

std::vector<Tableau> enumerate_mpct(const Composition& alpha, bool star) {
  std::vector<Tableau> out;
  for (const Tableau& t : enumerate_pct(alpha))
    for (Tableau& m : markings_of(t, star)) out.push_back(std::move(m));
  return out;
}

MarkedWord reading_word(const Tableau& t) {
  MarkedWord w;
  size_t width = 0;
  for (const auto& row : t.rows) width = std::max(width, row.size());
  for (size_t c = 0; c < width; ++c)
    for (const auto& row : t.rows)
      if (c < row.size()) w.push_back(row[c]);
  return w;
}

bool is_standard(const Tableau& t, bool allow_marks) {
  if (!allow_marks && t.has_marks()) return false;
  const int n = t.cell_count();
  std::vector<int> seen(n + 1, 0);
  for (const auto& row : t.rows)
    for (const Entry& e : row) {
      if (e.value > n || seen[e.value]) return false;
      seen[e.value] = 1;
    }
  return is_mpct(t);
}

SubsetOfRange descent_set(const MarkedWord& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> seen(n + 1, 0);
  for (const Entry& e : w) {
    if (e.value < 1 || e.value > n || seen[e.value])
      throw std::invalid_argument("descent_set requires standard content");
    seen[e.value] = 1;
  }
  // marked values in reverse order of occurrence, then unmarked in order
  std::vector<int> u;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    if (it->marked) u.push_back(it->value);
  for (const Entry& e : w)
    if (!e.marked) u.push_back(e.value);
  std::vector<int> pos(n + 1, 0);
  for (int i = 0; i < n; ++i) pos[u[i]] = i;
  std::vector<int> elems;
  for (int i = 1; i < n; ++i)
    if (pos[i + 1] < pos[i]) elems.push_back(i);
  return SubsetOfRange(n, std::move(elems));
}

SubsetOfRange peak_set_of_tableau(const Tableau& s) {
  if (!is_standard(s, true))
    throw std::invalid_argument("peak_set_of_tableau requires a standard tableau");
  return peak_set(descent_set(reading_word(s)));
}

Tableau standardize(const Tableau& t) {
  if (!is_mpct(t)) throw std::invalid_argument("standardize requires an MPCT");
  weight(t);  // rejects weak weight
  struct Cell {
    int r, c, rw_pos;
  };
  // group cells by marked-alphabet letter
  std::vector<std::vector<Cell>> by_key(2 * max_value(t) + 1);
  {
    int pos = 0;
    size_t width = 0;
    for (const auto& row : t.rows) width = std::max(width, row.size());
    for (size_t c = 0; c < width; ++c)
      for (size_t r = 0; r < t.rows.size(); ++r)
        if (c < t.rows[r].size())
          by_key[t.rows[r][c].key()].push_back(
              {static_cast<int>(r), static_cast<int>(c), pos++});
  }
  Tableau out = t;
  int next = 1;
  for (size_t key = 1; key < by_key.size(); ++key) {
    auto cells = by_key[key];
    const bool marked = key % 2 == 1;
    std::sort(cells.begin(), cells.end(), [&](const Cell& a, const Cell& b) {
      return marked ? a.rw_pos > b.rw_pos : a.rw_pos < b.rw_pos;
    });
    for (const Cell& cell : cells)
      out.rows[cell.r][cell.c] = Entry{next++, marked};
  }
  return out;
}

std::optional<Tableau> destandardize(const Tableau& s, const Composition& beta) {
  if (!is_standard(s, true))
    throw std::invalid_argument("destandardize requires a standard tableau");
  if (beta.size() != s.cell_count())
    throw std::invalid_argument("destandardize: size mismatch");
  SubsetOfRange des = descent_set(reading_word(s));
  SubsetOfRange blocks = subset_of_comp(beta);
  for (int d : des.elements)
    if (!blocks.contains(d)) return std::nullopt;
  // replace 1..b1 by 1, the next b2 values by 2, ..., carrying marks
  std::vector<int> target(s.cell_count() + 1);
  {
    int v = 0;
    for (int i = 0; i < beta.length(); ++i)
      for (int j = 0; j < beta.parts[i]; ++j) target[++v] = i + 1;
  }
  Tableau out = s;
  for (auto& row : out.rows)
    for (Entry& e : row) e.value = target[e.value];
  return out;
}

std::vector<Tableau> enumerate_standard(const Composition& alpha, bool marked,
                                        bool star) {
  std::vector<Tableau> out;
  const Composition ones(std::vector<int>(alpha.size(), 1));
  if (marked) {
    for (const Tableau& t : enumerate_mpct(alpha, star))
      if (weight(t) == ones) out.push_back(t);
  } else {
    for (const Tableau& t : enumerate_pct(alpha))
      if (weight(t) == ones) out.push_back(t);
  }
  return out;
}

std::vector<MarkedWord> enumerate_word_markings(const MarkedWord& w) {
  for (const Entry& e : w)
    if (e.marked)
      throw std::invalid_argument("enumerate_word_markings requires an unmarked word");
  std::vector<MarkedWord> out;
  for (unsigned mask = 0; mask < (1u << w.size()); ++mask) {
    MarkedWord m = w;
    for (size_t i = 0; i < w.size(); ++i)
      if (mask & (1u << i)) m[i].marked = true;
    out.push_back(std::move(m));
  }
  return out;
}

Tableau superstandard(const Composition& alpha) {
  if (!is_peak_composition(alpha))
    throw std::invalid_argument("superstandard requires a peak composition");
  std::vector<std::vector<Entry>> rows;
  int v = 1;
  for (int part : alpha.parts) {
    std::vector<Entry> row;
    for (int j = 0; j < part; ++j) row.push_back(unmarked(v++));
    rows.push_back(std::move(row));
  }
  return Tableau(std::move(rows));
}

}  // namespace qschur
