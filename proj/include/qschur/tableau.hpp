#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "qschur/composition.hpp"

namespace qschur {

// Letter from the marked alphabet 1' < 1 < 2' < 2 < ...
struct Entry {
  int value = 1;
  bool marked = false;

  // strictly increasing in the marked-alphabet order
  int key() const { return 2 * value - (marked ? 1 : 0); }

  friend auto operator<=>(const Entry&, const Entry&) = default;
};

inline Entry unmarked(int v) { return Entry{v, false}; }
inline Entry primed(int v) { return Entry{v, true}; }

// Left-justified filling. One type serves PCT/MPCT/standard variants;
// validity is checked by predicates, not by the type.
struct Tableau {
  Composition shape;
  std::vector<std::vector<Entry>> rows;

  Tableau() = default;
  explicit Tableau(std::vector<std::vector<Entry>> r);

  int cell_count() const { return shape.size(); }
  bool has_marks() const;

  friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

using MarkedWord = std::vector<Entry>;

// Peak composition tableau: weakly increasing rows, strictly increasing
// first column, every value-prefix subdiagram a peak composition.
// Rejects marked entries.
bool is_pct(const Tableau& t);

// Marked peak composition tableau (marked-alphabet row/column conditions,
// prefix-shape condition, and the first-column adjacency condition).
bool is_mpct(const Tableau& t);

// wt(t)_i = number of cells with value i, either mark. Rejects fillings
// that skip a value (weak weight).
Composition weight(const Tableau& t);

// All unmarked tableaux of the given peak shape with is_pct and strong weight.
std::vector<Tableau> enumerate_pct(const Composition& alpha);

// All MPCT (MPCT* when star) of the given peak shape with strong weight.
std::vector<Tableau> enumerate_mpct(const Composition& alpha, bool star);

// (p, m): p = sum over rows of (#distinct values - 1); m = #first-column
// cells whose right and below neighbours both exist and carry equal values.
std::pair<int, int> stats_pm(const Tableau& t);

// All MPCT (resp. MPCT*) whose unmarking is t; |result| = 2^(p-m) when star.
std::vector<Tableau> markings_of(const Tableau& t, bool star);

// Columns left to right, each top to bottom.
MarkedWord reading_word(const Tableau& t);

// is_mpct and values exactly 1..n each once; marks arbitrary when
// allow_marks, otherwise none.
bool is_standard(const Tableau& t, bool allow_marks);

// Descent set of a standard marked word: the marked values, reversed, are
// prepended to the unmarked values; i is a descent iff i+1 occurs before i.
SubsetOfRange descent_set(const MarkedWord& w);

// Peak(Des(rw(s))) for a (marked) standard tableau.
SubsetOfRange peak_set_of_tableau(const Tableau& s);

// St': relabel with 1..n scanning values in marked-alphabet order; ties on
// unmarked values break by reading-word order, on marked values in reverse.
Tableau standardize(const Tableau& t);

// Inverse of St' at weight beta, defined when beta refines comp(Des(s)).
std::optional<Tableau> destandardize(const Tableau& s, const Composition& beta);

// SPCT / SMPCT / SMPCT* of the given shape.
std::vector<Tableau> enumerate_standard(const Composition& alpha, bool marked,
                                        bool star);

// All 2^k mark-assignments of an unmarked word.
std::vector<MarkedWord> enumerate_word_markings(const MarkedWord& w);

// Standard tableau filling rows consecutively left to right, top row first.
Tableau superstandard(const Composition& alpha);

}  // namespace qschur
