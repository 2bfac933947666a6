#include "qschur/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qschur {

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

long long to_ll(const Integer& i) { return i.convert_to<long long>(); }

nlohmann::json coeff_json(const Rational& r) {
  return {{"num", to_ll(numerator(r))}, {"den", to_ll(denominator(r))}};
}

Rational coeff_from_json(const nlohmann::json& j) {
  return Rational(j.at("num").get<long long>(), j.at("den").get<long long>());
}

std::string basis_name(BasisTag b) {
  switch (b) {
    case BasisTag::M: return "M";
    case BasisTag::F: return "F";
    case BasisTag::G: return "G";
  }
  throw std::logic_error("unknown basis");
}

BasisTag basis_from_name(const std::string& s) {
  if (s == "M") return BasisTag::M;
  if (s == "F") return BasisTag::F;
  if (s == "G") return BasisTag::G;
  throw std::invalid_argument("unknown basis tag: " + s);
}

std::string family_name(FamilyTag f) {
  switch (f) {
    case FamilyTag::HatP: return "hatP";
    case FamilyTag::HatQ: return "hatQ";
    case FamilyTag::YoungQuasischur: return "youngQS";
    case FamilyTag::FBasis: return "F";
    case FamilyTag::GBasis: return "G";
  }
  throw std::logic_error("unknown family");
}

std::string family_symbol(FamilyTag f) {
  switch (f) {
    case FamilyTag::HatP: return "Phat";
    case FamilyTag::HatQ: return "Qhat";
    case FamilyTag::YoungQuasischur: return "ys";
    case FamilyTag::FBasis: return "F";
    case FamilyTag::GBasis: return "G";
  }
  throw std::logic_error("unknown family");
}

std::string comp_index_str(const std::vector<int>& parts, Style style) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ')';
  return style == Style::Latex ? "{" + os.str() + "}" : os.str();
}

std::string subset_index_str(const std::vector<int>& elems, Style style) {
  std::ostringstream os;
  for (size_t i = 0; i < elems.size(); ++i) os << (i ? "," : "") << elems[i];
  if (style == Style::Latex) return "{\\{" + os.str() + "\\}}";
  return "{" + os.str() + "}";
}

// appends "+cX" / "-cX" with the coefficient 1 elided
void append_term(std::ostringstream& os, bool first, const Rational& coeff,
                 const std::string& symbol) {
  Rational a = coeff < 0 ? Rational(-coeff) : coeff;
  if (coeff < 0)
    os << '-';
  else if (!first)
    os << '+';
  if (a != 1) os << rational_str(a);
  os << symbol;
}

nlohmann::json index_to_json(const TermKey& key) {
  if (key.basis == BasisTag::M) return key.data;
  return nlohmann::json{{"elements", key.data}};
}

std::vector<int> index_from_json(const nlohmann::json& j) {
  if (j.is_array()) return j.get<std::vector<int>>();
  return j.at("elements").get<std::vector<int>>();
}

// display order: bases M < F < G, descending index within each basis
std::vector<std::pair<TermKey, Rational>> display_terms(const QSymExpr& e) {
  std::vector<std::pair<TermKey, Rational>> terms(e.terms().begin(),
                                                  e.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.basis != b.first.basis) return a.first.basis < b.first.basis;
    return a.first.data > b.first.data;
  });
  return terms;
}

}  // namespace

nlohmann::json subset_to_json(const SubsetOfRange& d) {
  return {{"ambient", d.ambient}, {"elements", d.elements}};
}

nlohmann::json tableau_to_json(const Tableau& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json jr = nlohmann::json::array();
    for (const Entry& e : row) jr.push_back({{"v", e.value}, {"m", e.marked}});
    rows.push_back(jr);
  }
  return {{"shape", t.shape.parts}, {"rows", rows}};
}

Tableau tableau_from_json(const nlohmann::json& j) {
  std::vector<std::vector<Entry>> rows;
  for (const auto& jr : j.at("rows")) {
    std::vector<Entry> row;
    for (const auto& je : jr)
      row.push_back(Entry{je.at("v").get<int>(), je.at("m").get<bool>()});
    rows.push_back(std::move(row));
  }
  Tableau t(std::move(rows));
  if (j.contains("shape") &&
      j.at("shape").get<std::vector<int>>() != t.shape.parts)
    throw std::invalid_argument("tableau shape does not match rows");
  return t;
}

nlohmann::json expr_to_json(const QSymExpr& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, coeff] : display_terms(e)) {
    nlohmann::json jt = coeff_json(coeff);
    jt["basis"] = basis_name(key.basis);
    jt["index"] = index_to_json(key);
    terms.push_back(jt);
  }
  return {{"degree", e.degree()}, {"terms", terms}};
}

QSymExpr expr_from_json(const nlohmann::json& j) {
  QSymExpr e(j.at("degree").get<int>());
  for (const auto& jt : j.at("terms")) {
    TermKey key{basis_from_name(jt.at("basis").get<std::string>()),
                index_from_json(jt.at("index"))};
    e.add_term(key, coeff_from_json(jt));
  }
  return e;
}

nlohmann::json report_to_json(const ExpansionReport& r) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (auto it = r.coefficients.rbegin(); it != r.coefficients.rend(); ++it) {
    nlohmann::json jc = coeff_json(it->second);
    jc["index"] = it->first;
    coeffs.push_back(jc);
  }
  nlohmann::json out = {{"family", family_name(r.family)},
                        {"coefficients", coeffs},
                        {"residual_zero", r.residual_zero}};
  if (!r.residual_zero) out["residual"] = expr_to_json(r.residual);
  return out;
}

std::string format_expr(const QSymExpr& e, Style style) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, coeff] : display_terms(e)) {
    std::string symbol =
        basis_name(key.basis) + "_" +
        (key.basis == BasisTag::M ? comp_index_str(key.data, style)
                                  : subset_index_str(key.data, style));
    append_term(os, first, coeff, symbol);
    first = false;
  }
  return os.str();
}

std::string format_tableau(const Tableau& t, Style style) {
  std::ostringstream os;
  if (style == Style::Latex) {
    os << "\\begin{ytableau}\n";
    for (size_t r = 0; r < t.rows.size(); ++r) {
      for (size_t c = 0; c < t.rows[r].size(); ++c) {
        if (c) os << '&';
        os << t.rows[r][c].value << (t.rows[r][c].marked ? "'" : "");
      }
      os << "\\\\\n";
    }
    os << "\\end{ytableau}";
  } else {
    for (size_t r = 0; r < t.rows.size(); ++r) {
      if (r) os << '\n';
      for (size_t c = 0; c < t.rows[r].size(); ++c) {
        if (c) os << ' ';
        os << t.rows[r][c].value << (t.rows[r][c].marked ? "'" : "");
      }
    }
  }
  return os.str();
}

std::string format_report(const ExpansionReport& r, Style style) {
  std::ostringstream os;
  if (r.coefficients.empty()) {
    os << "0";
  } else {
    bool first = true;
    bool subset_indexed =
        r.family == FamilyTag::FBasis || r.family == FamilyTag::GBasis;
    for (auto it = r.coefficients.rbegin(); it != r.coefficients.rend(); ++it) {
      std::string symbol = family_symbol(r.family) + "_" +
                           (subset_indexed ? subset_index_str(it->first, style)
                                           : comp_index_str(it->first, style));
      append_term(os, first, it->second, symbol);
      first = false;
    }
  }
  if (!r.residual_zero)
    os << "\nresidual: " << format_expr(r.residual, style);
  return os.str();
}

Composition parse_composition(const std::string& s) {
  std::vector<int> parts;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size())
      throw std::invalid_argument("bad composition part: " + tok);
    parts.push_back(v);
  }
  if (parts.empty()) throw std::invalid_argument("empty composition");
  return Composition(std::move(parts));
}

}  // namespace qschur
