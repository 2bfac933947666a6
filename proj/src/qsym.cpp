#include "qschur/qsym.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qschur {

QSymExpr::QSymExpr(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
}

void QSymExpr::add_term(const TermKey& key, const Rational& coeff) {
  if (key.basis == BasisTag::M) {
    Composition c(key.data);
    if (c.size() != degree_)
      throw std::invalid_argument("M index size does not match degree");
  } else {
    SubsetOfRange d(degree_, key.data);  // validates range and ordering
    if (key.basis == BasisTag::G && !is_peak_composition(comp_of_subset(d)))
      throw std::invalid_argument("G index must correspond to a peak composition");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational QSymExpr::coefficient(const TermKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

QSymExpr monomial(const Composition& beta) {
  QSymExpr e(beta.size());
  e.add_term({BasisTag::M, beta.parts}, 1);
  return e;
}

QSymExpr fundamental(const SubsetOfRange& d) {
  QSymExpr e(d.ambient);
  e.add_term({BasisTag::F, d.elements}, 1);
  return e;
}

QSymExpr peak_fn(const SubsetOfRange& p) {
  if (!is_peak_composition(comp_of_subset(p)))
    throw std::invalid_argument("peak_fn: comp(P) must be a peak composition");
  QSymExpr e(p.ambient);
  e.add_term({BasisTag::G, p.elements}, 1);
  return e;
}

namespace {

void add_fundamental_as_monomials(QSymExpr& out, const SubsetOfRange& d,
                                  const Rational& coeff) {
  for (const Composition& gamma : refinements(comp_of_subset(d)))
    out.add_term({BasisTag::M, gamma.parts}, coeff);
}

}  // namespace

QSymExpr to_monomial(const QSymExpr& e) {
  const int n = e.degree();
  QSymExpr out(n);
  for (const auto& [key, coeff] : e.terms()) {
    switch (key.basis) {
      case BasisTag::M:
        out.add_term(key, coeff);
        break;
      case BasisTag::F:
        add_fundamental_as_monomials(out, SubsetOfRange(n, key.data), coeff);
        break;
      case BasisTag::G: {
        // sum of F_D over D in [n-1] with P contained in D symdiff (D+1);
        // i is in the symmetric difference iff (i in D) xor (i-1 in D)
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
          auto in_d = [&](int i) {
            return i >= 1 && i <= n - 1 && (mask & (1u << (i - 1)));
          };
          bool contains_p = true;
          for (int p : key.data)
            if (in_d(p) == in_d(p - 1)) {
              contains_p = false;
              break;
            }
          if (!contains_p) continue;
          std::vector<int> elems;
          for (int i = 1; i < n; ++i)
            if (in_d(i)) elems.push_back(i);
          add_fundamental_as_monomials(out, SubsetOfRange(n, std::move(elems)),
                                       coeff);
        }
        break;
      }
    }
  }
  return out;
}

QSymExpr add(const QSymExpr& a, const QSymExpr& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("add: degree mismatch");
  QSymExpr out = a;
  for (const auto& [key, coeff] : b.terms()) out.add_term(key, coeff);
  return out;
}

QSymExpr scale(const QSymExpr& a, const Rational& c) {
  QSymExpr out(a.degree());
  if (c == 0) return out;
  for (const auto& [key, coeff] : a.terms()) out.add_term(key, coeff * c);
  return out;
}

namespace {

// All quasi-shuffles of a and b with multiplicity (paths are counted).
void quasi_shuffle(const std::vector<int>& a, size_t ai,
                   const std::vector<int>& b, size_t bi,
                   std::vector<int>& prefix,
                   std::map<std::vector<int>, long>& out) {
  if (ai == a.size() && bi == b.size()) {
    ++out[prefix];
    return;
  }
  if (ai < a.size()) {
    prefix.push_back(a[ai]);
    quasi_shuffle(a, ai + 1, b, bi, prefix, out);
    prefix.pop_back();
  }
  if (bi < b.size()) {
    prefix.push_back(b[bi]);
    quasi_shuffle(a, ai, b, bi + 1, prefix, out);
    prefix.pop_back();
  }
  if (ai < a.size() && bi < b.size()) {
    prefix.push_back(a[ai] + b[bi]);
    quasi_shuffle(a, ai + 1, b, bi + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

QSymExpr multiply(const QSymExpr& a, const QSymExpr& b) {
  QSymExpr ma = to_monomial(a);
  QSymExpr mb = to_monomial(b);
  QSymExpr out(a.degree() + b.degree());
  for (const auto& [ka, ca] : ma.terms())
    for (const auto& [kb, cb] : mb.terms()) {
      std::map<std::vector<int>, long> shuffles;
      std::vector<int> prefix;
      quasi_shuffle(ka.data, 0, kb.data, 0, prefix, shuffles);
      for (const auto& [parts, mult] : shuffles)
        out.add_term({BasisTag::M, parts}, ca * cb * mult);
    }
  return out;
}

bool equal(const QSymExpr& a, const QSymExpr& b) {
  if (a.degree() != b.degree()) return false;
  return to_monomial(a).terms() == to_monomial(b).terms();
}

bool is_symmetric(const QSymExpr& e) {
  QSymExpr m = to_monomial(e);
  std::map<std::vector<int>, std::vector<const Rational*>> classes;
  for (const auto& [key, coeff] : m.terms()) {
    std::vector<int> sorted = key.data;
    std::sort(sorted.begin(), sorted.end());
    classes[sorted].push_back(&coeff);
  }
  for (const auto& [sorted, coeffs] : classes) {
    for (const Rational* c : coeffs)
      if (*c != *coeffs.front()) return false;
    // every rearrangement must be present (absent ones carry coefficient 0)
    auto fact = [](size_t k) {
      unsigned long long f = 1;
      for (size_t i = 2; i <= k; ++i) f *= i;
      return f;
    };
    unsigned long long perms = fact(sorted.size());
    size_t run = 1;
    for (size_t i = 1; i <= sorted.size(); ++i) {
      if (i < sorted.size() && sorted[i] == sorted[i - 1]) {
        ++run;
      } else {
        perms /= fact(run);
        run = 1;
      }
    }
    if (perms != coeffs.size()) return false;
  }
  return true;
}

QSymExpr word_to_fundamental(const MarkedWord& w) {
  return fundamental(descent_set(w));
}

}  // namespace qschur
