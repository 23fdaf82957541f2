#include "eic/table_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include "eic/error.hpp"

namespace eic {

namespace {

double numeric(const SweepRow& r, const std::string& column) {
  if (column == "axis") return r.axis;
  if (column == "re_n") return r.n.real();
  if (column == "im_n") return r.n.imag();
  if (column == "re_eps") return r.epsilon.real();
  if (column == "im_eps") return r.epsilon.imag();
  if (column == "re_mu") return r.mu.real();
  if (column == "im_mu") return r.mu.imag();
  if (column == "re_xi_eh") return r.xi_eh.real();
  if (column == "im_xi_eh") return r.xi_eh.imag();
  if (column == "re_xi_he") return r.xi_he.real();
  if (column == "im_xi_he") return r.xi_he.imag();
  if (column == "fom") return r.fom;
  throw InvalidParameter("unknown output column '" + column + "'");
}

std::string cell(const SweepRow& r, const std::string& column) {
  return column == "error" ? r.error : format_number(numeric(r, column));
}

}  // namespace

std::string format_number(double x, int digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 40> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, digits);
  return ec == std::errc{} ? std::string(buf.data(), ptr) : std::string("nan");
}

void write_csv(std::ostream& out, const SweepTable& table) {
  for (const auto& [key, value] : table.metadata) out << "# " << key << ": " << value << '\n';
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << cell(row, table.columns[c]);
    out << '\n';
  }
}

std::string to_csv(const SweepTable& table) {
  std::ostringstream os;
  write_csv(os, table);
  return os.str();
}

nlohmann::json to_json(const SweepTable& table) {
  using nlohmann::json;
  json meta = json::array();
  for (const auto& [key, value] : table.metadata) meta.push_back({{"key", key}, {"value", value}});
  json rows = json::array();
  for (const auto& row : table.rows) {
    json r = json::object();
    for (const auto& c : table.columns) {
      if (c == "error") {
        r[c] = row.error;
        continue;
      }
      // JSON has no NaN or infinity: null and "inf"/"-inf" strings stand in.
      const double x = numeric(row, c);
      if (std::isnan(x)) r[c] = nullptr;
      else if (std::isinf(x)) r[c] = format_number(x);
      else r[c] = x;
    }
    r["branch_sign"] = row.branch_sign;
    rows.push_back(std::move(r));
  }
  return json{{"metadata", meta}, {"columns", table.columns}, {"rows", rows}};
}

}  // namespace eic
