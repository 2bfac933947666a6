#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "qschur/composition.hpp"
#include "qschur/tableau.hpp"

namespace qschur::testing {

// "1 2 8' / 3 4' / 5 6 7' / 9'" -> Tableau; rows split on '/', marks by
// trailing apostrophe.
inline Tableau tab(const std::string& s) {
  std::vector<std::vector<Entry>> rows(1);
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    if (tok == "/") {
      rows.emplace_back();
      continue;
    }
    bool marked = tok.back() == '\'';
    if (marked) tok.pop_back();
    rows.back().push_back(Entry{std::stoi(tok), marked});
  }
  return Tableau(rows);
}

inline MarkedWord word(const std::string& s) {
  MarkedWord w;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    bool marked = tok.back() == '\'';
    if (marked) tok.pop_back();
    w.push_back(Entry{std::stoi(tok), marked});
  }
  return w;
}

inline std::vector<Composition> strict_partitions_of(int n) {
  std::vector<Composition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int max_part) -> void {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rem, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p - 1);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace qschur::testing
