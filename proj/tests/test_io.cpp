#include <doctest.h>

#include "helpers.hpp"
#include "qschur/families.hpp"
#include "qschur/io.hpp"

using namespace qschur;
using qschur::testing::tab;

TEST_CASE("tableau JSON round trip") {
  Tableau t = tab("1 2 8' / 3 4' / 5 6 7' / 9'");
  nlohmann::json j = tableau_to_json(t);
  CHECK(j["shape"] == nlohmann::json({3, 2, 3, 1}));
  CHECK(tableau_from_json(j) == t);
  j["shape"] = {3, 2, 3, 2};
  CHECK_THROWS(tableau_from_json(j));
}

TEST_CASE("expression JSON round trip") {
  QSymExpr e = add(hat_p_fundamental(Composition{2, 1}),
                   scale(peak_fn(SubsetOfRange(3, {2})), Rational(-1, 2)));
  nlohmann::json j = expr_to_json(e);
  CHECK(j["degree"] == 3);
  CHECK(expr_from_json(j) == e);

  QSymExpr m = hat_p_monomial(Composition{2, 1});
  CHECK(expr_from_json(expr_to_json(m)) == m);
}

TEST_CASE("report JSON") {
  auto r = expand_in_family(hat_p_monomial(Composition{2, 3, 1}),
                            FamilyTag::HatP);
  nlohmann::json j = report_to_json(r);
  CHECK(j["family"] == "hatP");
  CHECK(j["residual_zero"] == true);
  CHECK(j["coefficients"].size() == 1);
  CHECK(j["coefficients"][0]["index"] == nlohmann::json({2, 3, 1}));
  CHECK(j["coefficients"][0]["num"] == 1);
  CHECK(j["coefficients"][0]["den"] == 1);

  auto neg = expand_in_family(monomial(Composition{1, 2}), FamilyTag::HatP);
  nlohmann::json jn = report_to_json(neg);
  CHECK(jn["residual_zero"] == false);
  CHECK(jn.contains("residual"));
}

TEST_CASE("format_expr") {
  CHECK(format_expr(hat_p_monomial(Composition{2, 1}), Style::Ascii) ==
        "M_(2,1)+M_(1,2)+2M_(1,1,1)");
  CHECK(format_expr(hat_p_monomial(Composition{2, 1}), Style::Latex) ==
        "M_{(2,1)}+M_{(1,2)}+2M_{(1,1,1)}");
  CHECK(format_expr(hat_p_peak(Composition{2, 1}), Style::Ascii) == "G_{2}");
  CHECK(format_expr(QSymExpr(3), Style::Ascii) == "0");
  QSymExpr signs(3);
  signs.add_term(TermKey{BasisTag::M, {2, 1}}, -1);
  signs.add_term(TermKey{BasisTag::M, {1, 1, 1}}, Rational(1, 2));
  CHECK(format_expr(signs, Style::Ascii) == "-M_(2,1)+1/2M_(1,1,1)");
}

TEST_CASE("format_tableau") {
  Tableau t = tab("1 2' / 3");
  CHECK(format_tableau(t, Style::Ascii) == "1 2'\n3");
  CHECK(format_tableau(t, Style::Latex) ==
        "\\begin{ytableau}\n1&2'\\\\\n3\\\\\n\\end{ytableau}");
}

TEST_CASE("format_report") {
  auto r = expand_in_family(multiply(hat_p_monomial(Composition{1}),
                                     schur_p(Composition{3, 1})),
                            FamilyTag::HatP);
  CHECK(format_report(r, Style::Ascii) ==
        "Phat_(4,1)+Phat_(3,2)-Phat_(2,3)");
}

TEST_CASE("parse_composition") {
  CHECK(parse_composition("2,1") == Composition{2, 1});
  CHECK(parse_composition("10") == Composition{10});
  CHECK_THROWS(parse_composition(""));
  CHECK_THROWS(parse_composition("2,x"));
  CHECK_THROWS(parse_composition("2,0"));
}
