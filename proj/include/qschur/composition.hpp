#pragma once

#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qschur {

// Composition of n: ordered list of positive parts. Doubles as a basis
// index and a tableau weight.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
      if (x < 1) throw std::invalid_argument("composition parts must be >= 1");
  }
  Composition(std::initializer_list<int> p) : Composition(std::vector<int>(p)) {}

  int size() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
  }
  int length() const { return static_cast<int>(parts.size()); }

  friend auto operator<=>(const Composition&, const Composition&) = default;
};

// Subset of {1..n-1} with ambient size n; used for descent and peak sets.
struct SubsetOfRange {
  int ambient = 1;
  std::vector<int> elements;  // strictly increasing, all in [1, ambient-1]

  SubsetOfRange() = default;
  SubsetOfRange(int n, std::vector<int> elems);

  bool contains(int i) const;

  friend auto operator<=>(const SubsetOfRange&, const SubsetOfRange&) = default;
};

// Composition of D.ambient whose partial sums are exactly D.elements.
Composition comp_of_subset(const SubsetOfRange& d);

// Inverse of comp_of_subset: {b1, b1+b2, ...} in ambient |beta|.
SubsetOfRange subset_of_comp(const Composition& beta);

// True iff consecutive blocks of gamma sum to the parts of beta.
bool refines(const Composition& gamma, const Composition& beta);

// All gamma with refines(gamma, beta); count = 2^(|beta| - l(beta)).
std::vector<Composition> refinements(const Composition& beta);

// Every part except possibly the final one is >= 2.
bool is_peak_composition(const Composition& beta);

// All 2^(n-1) compositions of n, in a fixed deterministic order.
std::vector<Composition> compositions_of(int n);

// All peak compositions of n.
std::vector<Composition> peak_compositions(int n);

// Peak(D) = {i : i in D and i-1 not in D}; same ambient.
SubsetOfRange peak_set(const SubsetOfRange& d);

// Total lexicographic order within a fixed degree; throws on size mismatch.
std::strong_ordering lex_compare(const Composition& a, const Composition& b);

// Weakly decreasing rearrangement plus the inversion count of the unique
// permutation carrying alpha to it. Parts must be pairwise distinct.
std::pair<Composition, int> sort_to_partition(const Composition& alpha);

}  // namespace qschur
