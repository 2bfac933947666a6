#include "qschur/composition.hpp"

#include <algorithm>

namespace qschur {

SubsetOfRange::SubsetOfRange(int n, std::vector<int> elems)
    : ambient(n), elements(std::move(elems)) {
  if (n < 1) throw std::invalid_argument("ambient must be >= 1");
  for (size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] < 1 || elements[i] > ambient - 1)
      throw std::invalid_argument("subset element outside [1, n-1]");
    if (i > 0 && elements[i] <= elements[i - 1])
      throw std::invalid_argument("subset elements must strictly increase");
  }
}

bool SubsetOfRange::contains(int i) const {
  return std::binary_search(elements.begin(), elements.end(), i);
}

Composition comp_of_subset(const SubsetOfRange& d) {
  std::vector<int> parts;
  int prev = 0;
  for (int e : d.elements) {
    parts.push_back(e - prev);
    prev = e;
  }
  parts.push_back(d.ambient - prev);
  return Composition(std::move(parts));
}

SubsetOfRange subset_of_comp(const Composition& beta) {
  std::vector<int> elems;
  int sum = 0;
  for (int i = 0; i + 1 < beta.length(); ++i) {
    sum += beta.parts[i];
    elems.push_back(sum);
  }
  return SubsetOfRange(beta.size(), std::move(elems));
}

bool refines(const Composition& gamma, const Composition& beta) {
  if (gamma.size() != beta.size()) return false;
  size_t g = 0;
  for (int part : beta.parts) {
    int acc = 0;
    while (acc < part) {
      if (g >= gamma.parts.size()) return false;
      acc += gamma.parts[g++];
    }
    if (acc != part) return false;
  }
  return g == gamma.parts.size();
}

std::vector<Composition> refinements(const Composition& beta) {
  std::vector<Composition> out{Composition{}};
  out[0].parts.clear();
  for (int part : beta.parts) {
    // every composition of `part`, appended blockwise
    std::vector<Composition> next;
    for (const Composition& head : out) {
      for (const Composition& block : compositions_of(part)) {
        Composition c = head;
        c.parts.insert(c.parts.end(), block.parts.begin(), block.parts.end());
        next.push_back(std::move(c));
      }
    }
    out = std::move(next);
  }
  return out;
}

bool is_peak_composition(const Composition& beta) {
  for (int i = 0; i + 1 < beta.length(); ++i)
    if (beta.parts[i] < 2) return false;
  return beta.length() > 0;
}

std::vector<Composition> compositions_of(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<Composition> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> elems;
    for (int i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) elems.push_back(i);
    out.push_back(comp_of_subset(SubsetOfRange(n, std::move(elems))));
  }
  return out;
}

std::vector<Composition> peak_compositions(int n) {
  std::vector<Composition> out;
  for (const Composition& c : compositions_of(n))
    if (is_peak_composition(c)) out.push_back(c);
  return out;
}

SubsetOfRange peak_set(const SubsetOfRange& d) {
  std::vector<int> elems;
  for (int e : d.elements)
    if (!d.contains(e - 1)) elems.push_back(e);
  return SubsetOfRange(d.ambient, std::move(elems));
}

std::strong_ordering lex_compare(const Composition& a, const Composition& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("lex_compare requires equal sizes");
  return std::lexicographical_compare_three_way(
      a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end());
}

std::pair<Composition, int> sort_to_partition(const Composition& alpha) {
  const auto& p = alpha.parts;
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] == p[j])
        throw std::invalid_argument("sort_to_partition requires distinct parts");
      if (p[i] < p[j]) ++inv;
    }
  std::vector<int> sorted = p;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  return {Composition(std::move(sorted)), inv};
}

}  // namespace qschur
