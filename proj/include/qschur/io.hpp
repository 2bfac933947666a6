#pragma once

#include <string>

#include <json.hpp>

#include "qschur/composition.hpp"
#include "qschur/families.hpp"
#include "qschur/qsym.hpp"
#include "qschur/tableau.hpp"

namespace qschur {

enum class Style { Ascii, Latex };

nlohmann::json subset_to_json(const SubsetOfRange& d);

nlohmann::json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);

nlohmann::json expr_to_json(const QSymExpr& e);
QSymExpr expr_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ExpansionReport& r);

// "M_(2,1)+M_(1,2)+2M_(1,1,1)" / "M_{(2,1)}+M_{(1,2)}+2M_{(1,1,1)}".
// Terms are ordered M < F < G, then by descending index.
std::string format_expr(const QSymExpr& e, Style style);

std::string format_tableau(const Tableau& t, Style style);

std::string format_report(const ExpansionReport& r, Style style);

// "2,1" -> Composition{2,1}
Composition parse_composition(const std::string& s);

}  // namespace qschur
