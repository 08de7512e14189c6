#include <composita/document.hpp>

#include <composita/error.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace composita {

OutputDocument OutputDocument::from_series(const TruncatedSeries& s, std::string expr) {
  OutputDocument doc;
  doc.kind = Kind::sequence;
  doc.order = s.order();
  doc.expr = std::move(expr);
  doc.coefficients = s.coefficients();
  return doc;
}

OutputDocument OutputDocument::from_triangle(const CompositaTriangle& t, std::string expr) {
  OutputDocument doc;
  doc.kind = Kind::triangle;
  doc.order = t.max_row();
  doc.expr = std::move(expr);
  doc.rows.reserve(static_cast<std::size_t>(t.max_row()));
  for (int n = 1; n <= t.max_row(); ++n) {
    std::vector<Rational> row;
    row.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) row.push_back(t.entry(n, k));
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

std::string OutputDocument::to_json() const {
  nlohmann::json j;
  j["kind"] = kind == Kind::sequence ? "sequence" : "triangle";
  j["order"] = order;
  j["expr"] = expr;
  if (kind == Kind::sequence) {
    auto& list = j["coefficients"] = nlohmann::json::array();
    for (std::size_t n = 0; n < coefficients.size(); ++n)
      list.push_back({std::to_string(n), to_string(coefficients[n])});
  } else {
    auto& list = j["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json jrow = nlohmann::json::array();
      for (const auto& v : row) jrow.push_back(to_string(v));
      list.push_back(std::move(jrow));
    }
  }
  return j.dump();
}

OutputDocument OutputDocument::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw gf_error(errc::invalid_parameter, std::string("bad document json: ") + e.what());
  }
  try {
    OutputDocument doc;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "sequence") doc.kind = Kind::sequence;
    else if (kind == "triangle") doc.kind = Kind::triangle;
    else throw gf_error(errc::invalid_parameter, "bad document kind '" + kind + "'");
    doc.order = j.at("order").get<int>();
    doc.expr = j.value("expr", "");
    if (doc.kind == Kind::sequence) {
      for (const auto& pair : j.at("coefficients")) {
        const std::size_t index = std::stoul(pair.at(0).get<std::string>());
        if (index != doc.coefficients.size())
          throw gf_error(errc::invalid_parameter, "coefficient indices out of order");
        doc.coefficients.push_back(rational_from_string(pair.at(1).get<std::string>()));
      }
    } else {
      for (const auto& jrow : j.at("rows")) {
        std::vector<Rational> row;
        for (const auto& v : jrow) row.push_back(rational_from_string(v.get<std::string>()));
        doc.rows.push_back(std::move(row));
      }
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw gf_error(errc::invalid_parameter, std::string("bad document json: ") + e.what());
  }
}

std::string OutputDocument::to_csv() const {
  std::ostringstream out;
  if (kind == Kind::sequence) {
    out << "n,value\n";
    for (std::size_t n = 0; n < coefficients.size(); ++n)
      out << n << ',' << to_string(coefficients[n]) << '\n';
  } else {
    out << "n,k,value\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        out << i + 1 << ',' << j + 1 << ',' << to_string(rows[i][j]) << '\n';
  }
  return out.str();
}

std::string OutputDocument::to_table() const {
  std::ostringstream out;
  if (kind == Kind::sequence) {
    for (std::size_t n = 0; n < coefficients.size(); ++n)
      out << 'a' << '(' << n << ") = " << to_string(coefficients[n]) << '\n';
    return out.str();
  }
  std::size_t width = 1;
  for (const auto& row : rows)
    for (const auto& v : row) width = std::max(width, to_string(v).size());
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::string cell = to_string(row[j]);
      if (j > 0) out << "  ";
      out << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

std::string OutputDocument::render(const std::string& format) const {
  if (format == "table") return to_table();
  if (format == "json") return to_json();
  if (format == "csv") return to_csv();
  throw gf_error(errc::invalid_parameter, "unknown format '" + format + "'");
}

int cli_exit_code(const std::exception& error) noexcept {
  if (dynamic_cast<const syntax_error*>(&error)) return 2;
  if (const auto* gf = dynamic_cast<const gf_error*>(&error))
    return gf->code() == errc::residual_nonzero ? 4 : 3;
  return 1;
}

}  // namespace composita
