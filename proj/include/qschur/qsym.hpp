#pragma once

#include <compare>
#include <map>
#include <vector>

#include "qschur/composition.hpp"
#include "qschur/rational.hpp"
#include "qschur/tableau.hpp"

namespace qschur {

enum class BasisTag { M, F, G };

// Index of a single basis element: composition parts for M, subset elements
// for F and G (ambient = degree of the enclosing expression).
struct TermKey {
  BasisTag basis = BasisTag::M;
  std::vector<int> data;

  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

// Homogeneous degree-n quasisymmetric expression: finite map from
// (basis, index) to a nonzero exact rational coefficient. Mixed-basis
// expressions are allowed; to_monomial resolves them on demand.
class QSymExpr {
 public:
  explicit QSymExpr(int degree = 0);

  int degree() const { return degree_; }
  const std::map<TermKey, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  // Coefficient-wise accumulation; zero results are dropped. Validates the
  // index against the expression degree.
  void add_term(const TermKey& key, const Rational& coeff);

  Rational coefficient(const TermKey& key) const;

  friend bool operator==(const QSymExpr&, const QSymExpr&) = default;

 private:
  int degree_;
  std::map<TermKey, Rational> terms_;
};

QSymExpr monomial(const Composition& beta);
QSymExpr fundamental(const SubsetOfRange& d);

// Rejects P whose composition is not a peak composition.
QSymExpr peak_fn(const SubsetOfRange& p);

// Expression supported only on M terms, equal as a quasisymmetric function.
// F_D -> sum of M over refinements of comp(D); G_P -> sum of F_D over
// D in [n-1] with P contained in the symmetric difference of D and D+1.
QSymExpr to_monomial(const QSymExpr& e);

QSymExpr add(const QSymExpr& a, const QSymExpr& b);
QSymExpr scale(const QSymExpr& a, const Rational& c);

// Quasi-shuffle product: interleavings of the M indices where one part from
// each side may merge by addition, preserving relative orders.
QSymExpr multiply(const QSymExpr& a, const QSymExpr& b);

// Equality as quasisymmetric functions (via to_monomial).
bool equal(const QSymExpr& a, const QSymExpr& b);

// True iff all rearrangements of each M index carry equal coefficients.
bool is_symmetric(const QSymExpr& e);

// F_{Des(w)} for a standard marked word.
QSymExpr word_to_fundamental(const MarkedWord& w);

}  // namespace qschur
