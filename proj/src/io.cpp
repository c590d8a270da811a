#include "spbranch/io.hpp"

#include <algorithm>
#include <sstream>

#include "spbranch/error.hpp"

namespace spbranch::io {

namespace {

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be a JSON array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ValidationError(std::string(what) + " must contain only integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::string cell_name(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const SkewShape& s) {
  json j;
  j["outer"] = to_json(s.outer());
  j["inner"] = to_json(s.inner());
  return j;
}

json to_json(const Column& c) { return json(c.values()); }

json to_json(const Tableau& t) {
  json j;
  j["outer"] = to_json(t.outer());
  j["inner"] = to_json(t.inner());
  j["rows"] = json(t.rows());
  return j;
}

json to_json(const LrResult& r) {
  json j;
  j["p"] = to_json(r.p);
  j["q"] = to_json(r.q);
  json traj = json::array();
  for (const auto& p : r.trajectory) traj.push_back(to_json(p));
  j["trajectory"] = std::move(traj);
  j["steps"] = r.steps;
  return j;
}

json to_json(const MultiplicityTable& table) {
  json j;
  j["lambda"] = to_json(table.lambda);
  j["n"] = table.n;
  j["backend"] = std::string(to_string(table.backend));
  json ms = json::array();
  for (auto it = table.entries.rbegin(); it != table.entries.rend(); ++it) {
    json e;
    e["nu"] = to_json(it->first);
    e["m"] = it->second;
    ms.push_back(std::move(e));
  }
  j["multiplicities"] = std::move(ms);
  return j;
}

Partition partition_from_json(const json& j) { return Partition(int_array(j, "partition")); }

SkewShape skew_shape_from_json(const json& j) {
  if (!j.is_object() || !j.contains("outer")) throw ValidationError("skew shape needs an \"outer\" field");
  Partition inner = j.contains("inner") ? partition_from_json(j.at("inner")) : Partition{};
  return SkewShape(partition_from_json(j.at("outer")), std::move(inner));
}

Tableau tableau_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows")) throw ValidationError("tableau JSON needs a \"rows\" field");
  const Partition inner = j.contains("inner") ? partition_from_json(j.at("inner")) : Partition{};
  const auto& rows_json = j.at("rows");
  if (!rows_json.is_array()) throw ValidationError("\"rows\" must be an array of arrays");
  std::vector<std::vector<int>> rows;
  for (const auto& r : rows_json) rows.push_back(int_array(r, "tableau row"));
  Tableau t(inner, std::move(rows));
  if (j.contains("outer") && partition_from_json(j.at("outer")) != t.outer()) {
    throw ValidationError("\"outer\" " + partition_from_json(j.at("outer")).to_string() +
                          " does not match the row lengths " + t.outer().to_string());
  }
  return t;
}

Column column_from_json(const json& j, int alphabet) { return Column(int_array(j, "column"), alphabet); }

Tableau parse_text_grid(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<int> inner;
  std::vector<std::vector<int>> rows;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string tok;
    std::vector<int> row;
    int dots = 0;
    bool any = false;
    while (tokens >> tok) {
      any = true;
      if (tok == ".") {
        if (!row.empty()) throw ValidationError("'.' after an entry on line " + std::to_string(line_no));
        ++dots;
        continue;
      }
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        row.push_back(v);
      } catch (const std::exception&) {
        throw ValidationError("cannot parse '" + tok + "' on line " + std::to_string(line_no));
      }
    }
    if (!any) continue;
    inner.push_back(dots);
    rows.push_back(std::move(row));
  }
  return Tableau(Partition::from_parts_allow_zeros(std::move(inner)), std::move(rows));
}

Tableau parse_tableau(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && (text[pos] == '{' || text[pos] == '[')) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ValidationError(std::string("invalid JSON: ") + e.what());
    }
    if (j.is_array()) {
      json wrapped;
      wrapped["rows"] = j;
      return tableau_from_json(wrapped);
    }
    return tableau_from_json(j);
  }
  return parse_text_grid(text);
}

std::string pretty(const Tableau& t) {
  if (t.cell_count() == 0) return "∅\n";
  const int rows = t.num_rows();
  const int cols = t.row_end(1);
  std::size_t width = 1;
  for (const auto& r : t.rows()) {
    for (int v : r) width = std::max(width, std::to_string(v).size());
  }
  auto present = [&](int i, int j) { return i >= 1 && i <= rows && j >= 1 && j <= cols && t.has_cell({i, j}); };
  auto horizontal = [&](int boundary, int j) { return present(boundary, j) || present(boundary + 1, j); };
  auto vertical = [&](int i, int b) { return present(i, b) || present(i, b + 1); };

  static const char* const kJunction[16] = {
      // bits: up=1, down=2, left=4, right=8
      " ", "│", "│", "│", "─", "┘", "┐", "┤", "─", "└", "┌", "├", "─", "┴", "┬", "┼",
  };
  const std::string bar((width + 2), ' ');
  std::string dash;
  for (std::size_t k = 0; k < width + 2; ++k) dash += "─";

  auto rstrip = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };

  std::string out;
  for (int b = 0; b <= rows; ++b) {
    std::string line;
    for (int x = 0; x <= cols; ++x) {
      int bits = 0;
      if (b >= 1 && vertical(b, x)) bits |= 1;
      if (b < rows && vertical(b + 1, x)) bits |= 2;
      if (x >= 1 && horizontal(b, x)) bits |= 4;
      if (x < cols && horizontal(b, x + 1)) bits |= 8;
      line += kJunction[bits];
      if (x < cols) line += horizontal(b, x + 1) ? dash : bar;
    }
    out += rstrip(std::move(line)) + "\n";
    if (b == rows) break;
    const int i = b + 1;
    std::string content;
    for (int x = 0; x <= cols; ++x) {
      content += vertical(i, x) ? "│" : " ";
      if (x < cols) {
        if (present(i, x + 1)) {
          std::string v = std::to_string(t.at(i, x + 1));
          content += " " + std::string(width - v.size(), ' ') + v + " ";
        } else {
          content += bar;
        }
      }
    }
    out += rstrip(std::move(content)) + "\n";
  }
  return out;
}

std::string format_set(const std::vector<int>& values) {
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
  return s + "}";
}

std::string format_tuple(const std::vector<int>& values) {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
  return s + ")";
}

std::string semistandard_violation(const Tableau& t, int m) {
  for (int i = 1; i <= t.num_rows(); ++i) {
    for (int j = t.inner().part(i) + 1; j <= t.row_end(i); ++j) {
      const int v = t.at(i, j);
      if (v > m) return "entry " + std::to_string(v) + " at " + cell_name(i, j) + " exceeds 2n = " + std::to_string(m);
    }
  }
  for (int i = 1; i <= t.num_rows(); ++i) {
    for (int j = t.inner().part(i) + 1; j <= t.row_end(i); ++j) {
      if (j < t.row_end(i) && t.at(i, j) > t.at(i, j + 1)) {
        return "row not weakly increasing at " + cell_name(i, j + 1);
      }
      if (t.has_cell({i + 1, j}) && t.at(i, j) >= t.at(i + 1, j)) {
        return "column not strictly increasing at " + cell_name(i + 1, j);
      }
    }
  }
  return {};
}

}  // namespace spbranch::io
