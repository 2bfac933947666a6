#pragma once

#include <map>
#include <string>
#include <vector>

#include "qschur/composition.hpp"
#include "qschur/qsym.hpp"

namespace qschur {

// Expansion targets: the tableau-generated families plus the F and G bases.
enum class FamilyTag { HatP, HatQ, YoungQuasischur, FBasis, GBasis };

enum class HatPRoute { Statistic, Marked };

// M-basis expansion of the quasisymmetric Schur P-function, either via the
// 2^(p(T)-m(T)) statistic over PCT or via the marked tableaux MPCT*.
QSymExpr hat_p_monomial(const Composition& alpha,
                        HatPRoute route = HatPRoute::Statistic);

// M-basis expansion of the Q-function (sum over all of MPCT).
QSymExpr hat_q_monomial(const Composition& alpha);

// F-basis expansions over standard marked tableaux.
QSymExpr hat_p_fundamental(const Composition& alpha);
QSymExpr hat_q_fundamental(const Composition& alpha);

// G-basis expansion 2^(-l(alpha)) sum over SPCT of 2^(|Peak(S)|+1) G_Peak(S);
// integral and unitriangular with unit leading coefficient.
QSymExpr hat_p_peak(const Composition& alpha);

// Schur Q as the alternating sum of hat-Q over peak rearrangements of a
// strict partition; Schur P = 2^(-l(lambda)) Schur Q.
QSymExpr schur_q(const Composition& lambda);
QSymExpr schur_p(const Composition& lambda);

// Generating function of semistandard Young composition tableaux with
// strong weight; defined for arbitrary compositions.
QSymExpr young_quasischur(const Composition& beta);

// Strong-weight SSYCT of the given shape, as tableaux (entries <= |beta|).
std::vector<Tableau> enumerate_ssyct(const Composition& beta);

// Result of expressing an expression in a target family. Keys are
// composition parts for HatP/HatQ/YoungQuasischur and subset elements for
// FBasis/GBasis. When residual_zero is false the input is not in the
// family's span and residual holds the unexpanded remainder (M basis).
struct ExpansionReport {
  FamilyTag family = FamilyTag::HatP;
  std::map<std::vector<int>, Rational> coefficients;
  bool residual_zero = false;
  QSymExpr residual;
};

// HatP/HatQ use lex-greedy unitriangular elimination; the other targets use
// an exact dense rational solve on the full degree-n coordinate space.
ExpansionReport expand_in_family(const QSymExpr& e, FamilyTag family);

struct VerificationReport {
  bool all_passed = true;
  int shapes_checked = 0;
  int partitions_checked = 0;
  std::vector<std::string> failures;
};

// Four-route agreement for every peak composition of size <= n_max, plus
// symmetry of the alternating Schur Q sums for strict partitions <= n_max.
VerificationReport verify_identities(int n_max);

}  // namespace qschur
