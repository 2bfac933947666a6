#include "qschur/families.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qschur {

namespace {

void require_peak(const Composition& alpha, const char* who) {
  if (!is_peak_composition(alpha))
    throw std::invalid_argument(std::string(who) +
                                " requires a peak composition");
}

std::string parts_str(const std::vector<int>& parts) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts.size(); ++i)
    os << (i ? "," : "") << parts[i];
  os << ')';
  return os.str();
}

}  // namespace

QSymExpr hat_p_monomial(const Composition& alpha, HatPRoute route) {
  require_peak(alpha, "hat_p_monomial");
  QSymExpr out(alpha.size());
  if (route == HatPRoute::Statistic) {
    for (const Tableau& t : enumerate_pct(alpha)) {
      auto [p, m] = stats_pm(t);
      out.add_term({BasisTag::M, weight(t).parts}, pow2(p - m));
    }
  } else {
    for (const Tableau& t : enumerate_mpct(alpha, /*star=*/true))
      out.add_term({BasisTag::M, weight(t).parts}, 1);
  }
  return out;
}

QSymExpr hat_q_monomial(const Composition& alpha) {
  require_peak(alpha, "hat_q_monomial");
  QSymExpr out(alpha.size());
  for (const Tableau& t : enumerate_mpct(alpha, /*star=*/false))
    out.add_term({BasisTag::M, weight(t).parts}, 1);
  return out;
}

namespace {

QSymExpr standard_descent_sum(const Composition& alpha, bool star) {
  QSymExpr out(alpha.size());
  for (const Tableau& s : enumerate_standard(alpha, /*marked=*/true, star))
    out.add_term({BasisTag::F, descent_set(reading_word(s)).elements}, 1);
  return out;
}

}  // namespace

QSymExpr hat_p_fundamental(const Composition& alpha) {
  require_peak(alpha, "hat_p_fundamental");
  return standard_descent_sum(alpha, /*star=*/true);
}

QSymExpr hat_q_fundamental(const Composition& alpha) {
  require_peak(alpha, "hat_q_fundamental");
  return standard_descent_sum(alpha, /*star=*/false);
}

QSymExpr hat_p_peak(const Composition& alpha) {
  require_peak(alpha, "hat_p_peak");
  QSymExpr out(alpha.size());
  for (const Tableau& s : enumerate_standard(alpha, /*marked=*/false, false)) {
    SubsetOfRange peak = peak_set_of_tableau(s);
    out.add_term({BasisTag::G, peak.elements},
                 pow2(static_cast<int>(peak.elements.size()) + 1 -
                      alpha.length()));
  }
  return out;
}

QSymExpr schur_q(const Composition& lambda) {
  for (int i = 0; i + 1 < lambda.length(); ++i)
    if (lambda.parts[i] <= lambda.parts[i + 1])
      throw std::invalid_argument("schur_q requires a strict partition");
  QSymExpr out(lambda.size());
  std::vector<int> parts = lambda.parts;
  std::sort(parts.begin(), parts.end());
  do {
    Composition alpha(parts);
    if (!is_peak_composition(alpha)) continue;
    auto [sorted, inversions] = sort_to_partition(alpha);
    Rational sign = inversions % 2 == 0 ? 1 : -1;
    out = add(out, scale(hat_q_monomial(alpha), sign));
  } while (std::next_permutation(parts.begin(), parts.end()));
  return out;
}

QSymExpr schur_p(const Composition& lambda) {
  return scale(schur_q(lambda), pow2(-lambda.length()));
}

std::vector<Tableau> enumerate_ssyct(const Composition& beta) {
  const int n = beta.size();
  const int nrows = beta.length();
  std::vector<std::vector<Entry>> grid(nrows);
  for (int i = 0; i < nrows; ++i) grid[i].resize(beta.parts[i]);
  std::vector<Tableau> out;

  auto triple_rule_ok = [&]() {
    for (int r2 = 0; r2 < nrows; ++r2)
      for (int c = 1; c <= beta.parts[r2]; ++c)
        for (int r1 = 0; r1 < r2; ++r1) {
          if (c >= beta.parts[r1]) continue;
          int c1 = grid[r1][c].value;      // C1 at (r1, c)
          int c2 = grid[r2][c - 1].value;  // C2 lower, column left of C1
          if (c1 < c2) continue;
          if (c >= beta.parts[r2] || grid[r2][c].value >= c1) return false;
        }
    return true;
  };

  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == nrows) {
      std::vector<int> counts(n, 0);
      for (const auto& row : grid)
        for (const Entry& e : row) ++counts[e.value - 1];
      int maxv = n;
      while (maxv > 0 && counts[maxv - 1] == 0) --maxv;
      for (int v = 0; v < maxv; ++v)
        if (counts[v] == 0) return;  // weak weight
      if (triple_rule_ok()) out.emplace_back(grid);
      return;
    }
    if (c == beta.parts[r]) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = grid[r][c - 1].value;
    if (c == 0 && r > 0) lo = grid[r - 1][0].value + 1;
    for (int v = lo; v <= n; ++v) {
      grid[r][c] = unmarked(v);
      fill(r, c + 1);
    }
  };
  fill(0, 0);
  return out;
}

QSymExpr young_quasischur(const Composition& beta) {
  QSymExpr out(beta.size());
  for (const Tableau& t : enumerate_ssyct(beta))
    out.add_term({BasisTag::M, weight(t).parts}, 1);
  return out;
}

namespace {

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

QSymExpr family_element(FamilyTag family, int n, const std::vector<int>& index) {
  switch (family) {
    case FamilyTag::HatP:
      return hat_p_monomial(Composition(index));
    case FamilyTag::HatQ:
      return hat_q_monomial(Composition(index));
    case FamilyTag::YoungQuasischur:
      return young_quasischur(Composition(index));
    case FamilyTag::FBasis:
      return fundamental(SubsetOfRange(n, index));
    case FamilyTag::GBasis:
      return peak_fn(SubsetOfRange(n, index));
  }
  throw std::logic_error("unknown family");
}

std::vector<std::vector<int>> family_indices(FamilyTag family, int n) {
  std::vector<std::vector<int>> out;
  switch (family) {
    case FamilyTag::HatP:
    case FamilyTag::HatQ:
      for (const Composition& c : peak_compositions(n)) out.push_back(c.parts);
      break;
    case FamilyTag::YoungQuasischur:
      for (const Composition& c : compositions_of(n)) out.push_back(c.parts);
      break;
    case FamilyTag::FBasis:
      for (const Composition& c : compositions_of(n))
        out.push_back(subset_of_comp(c).elements);
      break;
    case FamilyTag::GBasis:
      for (const Composition& c : peak_compositions(n))
        out.push_back(subset_of_comp(c).elements);
      break;
  }
  return out;
}

ExpansionReport expand_greedy(const QSymExpr& input, FamilyTag family) {
  ExpansionReport report;
  report.family = family;
  QSymExpr residual = to_monomial(input);
  while (!residual.empty()) {
    // terms are M-only and map-ordered by parts, so the lex-greatest
    // composition with nonzero coefficient is the last one
    TermKey lead = residual.terms().rbegin()->first;
    Composition beta(lead.data);
    if (!is_peak_composition(beta)) {
      report.residual_zero = false;
      report.residual = residual;
      return report;
    }
    QSymExpr f = family == FamilyTag::HatP ? hat_p_monomial(beta)
                                           : hat_q_monomial(beta);
    Rational leading = f.coefficient(lead);
    Rational c = residual.terms().rbegin()->second / leading;
    report.coefficients[beta.parts] += c;
    residual = add(residual, scale(f, -c));
  }
  report.residual_zero = true;
  report.residual = QSymExpr(input.degree());
  return report;
}

ExpansionReport expand_dense(const QSymExpr& input, FamilyTag family) {
  ExpansionReport report;
  report.family = family;
  const int n = input.degree();
  QSymExpr target = to_monomial(input);

  std::vector<Composition> coords = compositions_of(n);
  std::map<std::vector<int>, int> coord_index;
  for (size_t i = 0; i < coords.size(); ++i)
    coord_index[coords[i].parts] = static_cast<int>(i);

  std::vector<std::vector<int>> indices = family_indices(family, n);
  Mat a = Mat::Zero(coords.size(), indices.size());
  for (size_t j = 0; j < indices.size(); ++j) {
    QSymExpr col = to_monomial(family_element(family, n, indices[j]));
    for (const auto& [key, coeff] : col.terms())
      a(coord_index.at(key.data), j) = coeff;
  }
  Vec b = Vec::Zero(coords.size());
  for (const auto& [key, coeff] : target.terms())
    b(coord_index.at(key.data)) = coeff;

  Eigen::FullPivLU<Mat> lu(a);
  Vec x = lu.solve(b);
  Vec r = b - a * x;
  bool exact = true;
  for (int i = 0; i < r.size(); ++i)
    if (r(i) != 0) exact = false;

  report.residual_zero = exact;
  report.residual = QSymExpr(n);
  if (exact) {
    for (size_t j = 0; j < indices.size(); ++j)
      if (x(j) != 0) report.coefficients[indices[j]] = x(j);
  } else {
    for (int i = 0; i < r.size(); ++i)
      if (r(i) != 0)
        report.residual.add_term({BasisTag::M, coords[i].parts}, r(i));
  }
  return report;
}

}  // namespace

ExpansionReport expand_in_family(const QSymExpr& e, FamilyTag family) {
  if (e.degree() == 0) {
    ExpansionReport report;
    report.family = family;
    report.residual_zero = true;
    return report;
  }
  if (family == FamilyTag::HatP || family == FamilyTag::HatQ)
    return expand_greedy(e, family);
  return expand_dense(e, family);
}

namespace {

void strict_partitions_of(int n, int max_part, std::vector<int>& prefix,
                          std::vector<Composition>& out) {
  if (n == 0) {
    out.push_back(Composition(prefix));
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    prefix.push_back(p);
    strict_partitions_of(n - p, p - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

VerificationReport verify_identities(int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  VerificationReport report;
  for (int n = 1; n <= n_max; ++n) {
    for (const Composition& alpha : peak_compositions(n)) {
      QSymExpr statistic = hat_p_monomial(alpha, HatPRoute::Statistic);
      QSymExpr marked = hat_p_monomial(alpha, HatPRoute::Marked);
      QSymExpr via_f = to_monomial(hat_p_fundamental(alpha));
      QSymExpr via_g = to_monomial(hat_p_peak(alpha));
      if (!(statistic == marked && equal(statistic, via_f) &&
            equal(statistic, via_g))) {
        report.all_passed = false;
        report.failures.push_back("hat-P routes disagree at shape " +
                                  parts_str(alpha.parts));
      }
      ++report.shapes_checked;
    }
    std::vector<Composition> strict;
    std::vector<int> prefix;
    strict_partitions_of(n, n, prefix, strict);
    for (const Composition& lambda : strict) {
      if (!is_symmetric(schur_q(lambda))) {
        report.all_passed = false;
        report.failures.push_back("schur_q not symmetric at partition " +
                                  parts_str(lambda.parts));
      }
      ++report.partitions_checked;
    }
  }
  return report;
}

}  // namespace qschur
