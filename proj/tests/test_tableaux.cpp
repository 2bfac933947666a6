#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "qschur/tableau.hpp"

using namespace qschur;
using qschur::testing::tab;
using qschur::testing::word;

namespace {

const char* kFig1 = "1 2 6 / 3 4 / 4 4 5 / 5";
const char* kS1 = "1 2 8' / 3 4' / 5 6 7' / 9'";

std::vector<Composition> peak_shapes_up_to(int n_max) {
  std::vector<Composition> out;
  for (int n = 1; n <= n_max; ++n)
    for (const Composition& a : peak_compositions(n)) out.push_back(a);
  return out;
}

}  // namespace

TEST_CASE("is_pct") {
  CHECK(is_pct(tab(kFig1)));
  CHECK_FALSE(is_pct(tab("1 3 / 2")));
  CHECK(is_pct(tab("1 1 / 2")));
  CHECK_THROWS(is_pct(tab("1 2' / 3")));
}

TEST_CASE("is_mpct") {
  CHECK(is_mpct(tab("1 2' / 2")));
  CHECK_FALSE(is_mpct(tab("1 2 / 2")));
  CHECK_FALSE(is_mpct(tab("1 1' / 2")));
  CHECK(is_mpct(tab(kS1)));
}

TEST_CASE("weight") {
  CHECK(weight(tab(kFig1)) == Composition{1, 1, 1, 3, 2, 1});
  CHECK(weight(tab("1 1 / 2")) == Composition{2, 1});
  CHECK(weight(tab("1 2' / 3")) == Composition{1, 1, 1});
  CHECK_THROWS(weight(tab("1 1 / 3")));
}

TEST_CASE("enumerate_pct") {
  auto pct21 = enumerate_pct(Composition{2, 1});
  std::set<Tableau> expected{tab("1 1 / 2"), tab("1 2 / 2"), tab("1 2 / 3")};
  CHECK(std::set<Tableau>(pct21.begin(), pct21.end()) == expected);
  CHECK(enumerate_pct(Composition{1}) == std::vector<Tableau>{tab("1")});
  auto pct2 = enumerate_pct(Composition{2});
  CHECK(std::set<Tableau>(pct2.begin(), pct2.end()) ==
        std::set<Tableau>{tab("1 1"), tab("1 2")});
  CHECK_THROWS(enumerate_pct(Composition{1, 2}));
}

TEST_CASE("enumerate_pct matches brute-force filter") {
  for (const Composition& alpha : peak_shapes_up_to(5)) {
    int n = alpha.size();
    std::set<Tableau> brute;
    std::vector<int> flat(n, 1);
    while (true) {
      std::vector<std::vector<Entry>> rows;
      int pos = 0;
      for (int part : alpha.parts) {
        rows.emplace_back();
        for (int c = 0; c < part; ++c) rows.back().push_back(unmarked(flat[pos++]));
      }
      Tableau t(rows);
      bool strong = true;
      int mx = *std::max_element(flat.begin(), flat.end());
      for (int v = 1; v <= mx; ++v)
        if (std::count(flat.begin(), flat.end(), v) == 0) strong = false;
      if (strong && is_pct(t)) brute.insert(t);
      int i = n - 1;
      while (i >= 0 && flat[i] == n) flat[i--] = 1;
      if (i < 0) break;
      ++flat[i];
    }
    auto fast = enumerate_pct(alpha);
    CHECK(std::set<Tableau>(fast.begin(), fast.end()) == brute);
  }
}

TEST_CASE("enumerate_mpct") {
  auto star21 = enumerate_mpct(Composition{2, 1}, true);
  std::set<Tableau> expected{tab("1 1 / 2"), tab("1 2' / 2"), tab("1 2' / 3"),
                             tab("1 2 / 3")};
  CHECK(std::set<Tableau>(star21.begin(), star21.end()) == expected);
  auto full1 = enumerate_mpct(Composition{1}, false);
  CHECK(std::set<Tableau>(full1.begin(), full1.end()) ==
        std::set<Tableau>{tab("1"), tab("1'")});
  CHECK(enumerate_mpct(Composition{2, 1}, false).size() == 16);
}

TEST_CASE("stats_pm") {
  CHECK(stats_pm(tab("1 2 / 3")) == std::pair(1, 0));
  CHECK(stats_pm(tab("1 2 / 2")) == std::pair(1, 1));
  CHECK(stats_pm(tab("1 1 / 2")) == std::pair(0, 0));
}

TEST_CASE("markings_of") {
  auto m3 = markings_of(tab("1 2 / 3"), true);
  CHECK(std::set<Tableau>(m3.begin(), m3.end()) ==
        std::set<Tableau>{tab("1 2 / 3"), tab("1 2' / 3")});
  CHECK(markings_of(tab("1 1 / 2"), true) ==
        std::vector<Tableau>{tab("1 1 / 2")});
  CHECK(markings_of(tab("1 2 / 2"), true) ==
        std::vector<Tableau>{tab("1 2' / 2")});
}

TEST_CASE("marking and cardinality invariants") {
  for (const Composition& alpha : peak_shapes_up_to(6)) {
    auto pct = enumerate_pct(alpha);
    auto star = enumerate_mpct(alpha, true);
    auto full = enumerate_mpct(alpha, false);
    std::set<Tableau> pct_set(pct.begin(), pct.end());

    size_t star_total = 0;
    for (const Tableau& t : pct) {
      auto [p, m] = stats_pm(t);
      auto marks = markings_of(t, true);
      CHECK(marks.size() == size_t(1) << (p - m));
      star_total += marks.size();
      for (const Tableau& mt : marks) {
        Tableau stripped = mt;
        for (auto& row : stripped.rows)
          for (Entry& e : row) e.marked = false;
        CHECK(pct_set.count(stripped) == 1);
      }
    }
    CHECK(star_total == star.size());
    CHECK(full.size() == (size_t(1) << alpha.length()) * star.size());
  }
}

TEST_CASE("reading_word") {
  CHECK(reading_word(tab(kS1)) == word("1 3 5 9' 2 4' 6 8' 7'"));
  CHECK(reading_word(tab("1 2 / 3")) == word("1 3 2"));
  CHECK(reading_word(tab("1")) == word("1"));
}

TEST_CASE("is_standard") {
  CHECK(is_standard(tab(kS1), true));
  CHECK_FALSE(is_standard(tab("1 1 / 2"), false));
  CHECK(is_standard(tab("1 2 / 3"), false));
  CHECK_FALSE(is_standard(tab(kS1), false));
}

TEST_CASE("descent_set") {
  CHECK(descent_set(reading_word(tab(kS1))) == SubsetOfRange(9, {2, 3, 6}));
  CHECK(descent_set(word("1 2 3 4")) == SubsetOfRange(4, {}));
  CHECK(descent_set(word("1 3 2")) == SubsetOfRange(3, {2}));
  CHECK_THROWS(descent_set(word("1 1")));
}

TEST_CASE("peak_set_of_tableau") {
  CHECK(peak_set_of_tableau(tab(kS1)) == SubsetOfRange(9, {2, 6}));
  CHECK(peak_set_of_tableau(tab("1 2 / 3")) == SubsetOfRange(3, {2}));
  Composition alpha{3, 2, 3, 1};
  CHECK(peak_set_of_tableau(superstandard(alpha)) == subset_of_comp(alpha));
}

TEST_CASE("standardize") {
  CHECK(standardize(tab("1 2 5' / 3 4' / 4 4 5' / 5'")) ==
        tab("1 2 8' / 3 4' / 5 6 7' / 9'"));
  CHECK(standardize(tab(kS1)) == tab(kS1));
  CHECK(standardize(tab("1 2' / 2")) == tab("1 2' / 3"));
}

TEST_CASE("destandardize") {
  CHECK(destandardize(tab("1 2 / 3"), Composition{2, 1}) == tab("1 1 / 2"));
  CHECK(destandardize(tab("1 2 / 3"), Composition{1, 2}) == std::nullopt);
  CHECK(destandardize(tab("1 2 / 3"), Composition{1, 1, 1}) == tab("1 2 / 3"));
  CHECK_THROWS(destandardize(tab("1 2 / 3"), Composition{2, 2}));
}

TEST_CASE("standardization round trip") {
  for (const Composition& alpha : peak_shapes_up_to(6)) {
    for (const Tableau& s : enumerate_standard(alpha, true, false)) {
      auto des = descent_set(reading_word(s)).elements;
      for (const Composition& beta : compositions_of(alpha.size())) {
        auto sb = subset_of_comp(beta).elements;
        bool compat =
            std::includes(sb.begin(), sb.end(), des.begin(), des.end());
        auto t = destandardize(s, beta);
        CHECK(t.has_value() == compat);
        if (t) {
          CHECK(is_mpct(*t));
          CHECK(weight(*t) == beta);
          CHECK(standardize(*t) == s);
        }
      }
    }
    for (const Tableau& t : enumerate_mpct(alpha, false))
      CHECK(destandardize(standardize(t), weight(t)) == t);
  }
}

TEST_CASE("enumerate_standard") {
  CHECK(enumerate_standard(Composition{2, 1}, false, false) ==
        std::vector<Tableau>{tab("1 2 / 3")});
  auto sm = enumerate_standard(Composition{2, 1}, true, true);
  CHECK(std::set<Tableau>(sm.begin(), sm.end()) ==
        std::set<Tableau>{tab("1 2 / 3"), tab("1 2' / 3")});
  auto s1 = enumerate_standard(Composition{1}, true, false);
  CHECK(std::set<Tableau>(s1.begin(), s1.end()) ==
        std::set<Tableau>{tab("1"), tab("1'")});
}

TEST_CASE("marked-order lemma") {
  for (const Composition& alpha : peak_shapes_up_to(7)) {
    int n = alpha.size();
    for (const Tableau& s : enumerate_standard(alpha, true, false)) {
      MarkedWord w = reading_word(s);
      auto des = descent_set(w);
      std::vector<int> pos(n + 1);
      std::vector<bool> marked(n + 1);
      for (int i = 0; i < n; ++i) {
        pos[w[i].value] = i;
        marked[w[i].value] = w[i].marked;
      }
      for (int i = 1; i <= n; ++i)
        for (int k = 1; i + k <= n; ++k) {
          bool run = true;
          for (int j = i; j < i + k; ++j)
            if (des.contains(j)) run = false;
          if (!run) continue;
          if (pos[i] < pos[i + k])
            CHECK_FALSE(marked[i + k]);
          else
            CHECK(marked[i]);
        }
    }
  }
}

TEST_CASE("descent consistency with the local rule") {
  for (const Composition& alpha : peak_shapes_up_to(7)) {
    int n = alpha.size();
    for (const Tableau& s : enumerate_standard(alpha, true, false)) {
      MarkedWord w = reading_word(s);
      auto des = descent_set(w);
      std::vector<int> pos(n + 1);
      std::vector<bool> marked(n + 1);
      for (int i = 0; i < n; ++i) {
        pos[w[i].value] = i;
        marked[w[i].value] = w[i].marked;
      }
      for (int i = 1; i < n; ++i) {
        bool local = pos[i] > pos[i + 1] ? !marked[i] : marked[i + 1];
        CHECK(des.contains(i) == local);
      }
    }
  }
}

TEST_CASE("lex maximality of the superstandard peak set") {
  for (const Composition& alpha : peak_shapes_up_to(7)) {
    Tableau s0 = superstandard(alpha);
    for (const Tableau& s : enumerate_standard(alpha, false, false)) {
      if (s == s0) continue;
      CHECK(lex_compare(comp_of_subset(peak_set_of_tableau(s)), alpha) ==
            std::strong_ordering::less);
    }
  }
}

TEST_CASE("weight triangularity") {
  for (const Composition& alpha : peak_shapes_up_to(7))
    for (const Tableau& t : enumerate_pct(alpha)) {
      Composition w = weight(t);
      CHECK(w.size() == alpha.size());
      CHECK(lex_compare(w, alpha) <= 0);
    }
}

TEST_CASE("enumerate_word_markings") {
  CHECK(enumerate_word_markings(word("1")).size() == 2);
  auto m = enumerate_word_markings(word("1 3 2"));
  CHECK(m.size() == 8);
  CHECK(std::count(m.begin(), m.end(), word("1 3 2")) == 1);
  CHECK_THROWS(enumerate_word_markings(word("1 2'")));
}

TEST_CASE("superstandard") {
  CHECK(superstandard(Composition{2, 1}) == tab("1 2 / 3"));
  CHECK(superstandard(Composition{3, 2}) == tab("1 2 3 / 4 5"));
  CHECK_THROWS(superstandard(Composition{1, 2}));
}
