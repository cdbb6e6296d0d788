#include "superform/form_io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace superform {

namespace {

using json = nlohmann::json;

struct Located {
  std::string source;
  [[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& what) const {
    std::ostringstream os;
    os << source << ":" << line << ":" << column << ": " << what;
    throw InputError(os.str());
  }
};

struct RawForm {
  std::optional<std::string> flavor;
  std::optional<long> k;
  std::optional<long> ell;
  std::map<std::string, Matrix<Exact>> matrices;
  std::size_t flavor_line = 1;
};

GramForm assemble(const RawForm& raw, const Located& where) {
  if (!raw.flavor) where.fail(1, 1, "missing field 'flavor'");
  Flavor flavor;
  if (*raw.flavor == "supersymmetric") {
    flavor = Flavor::Supersymmetric;
  } else if (*raw.flavor == "skew" || *raw.flavor == "skew-supersymmetric") {
    flavor = Flavor::SkewSupersymmetric;
  } else {
    where.fail(raw.flavor_line, 1, "unknown flavor '" + *raw.flavor + "'");
  }
  if (!raw.k || !raw.ell) where.fail(1, 1, "missing field 'k' or 'ell'");
  if (*raw.k < 0 || *raw.ell < 0) where.fail(1, 1, "dimensions must be nonnegative");
  const auto k = static_cast<std::size_t>(*raw.k);
  const auto two_ell = static_cast<std::size_t>(2 * *raw.ell);
  const bool super = flavor == Flavor::Supersymmetric;
  const std::size_t e = super ? k : two_ell;
  const std::size_t o = super ? two_ell : k;

  auto get = [&](const std::string& key) -> std::optional<Matrix<Exact>> {
    auto it = raw.matrices.find(key);
    if (it == raw.matrices.end()) return std::nullopt;
    return it->second;
  };
  Matrix<Exact> b = get("B").value_or(Matrix<Exact>(e, o));
  if (!get("B") && e * o != 0) where.fail(1, 1, "missing field 'B'");
  if (b.rows() == 0 && b.cols() == 0) b = Matrix<Exact>(e, o);
  if (b.rows() != e || b.cols() != o) {
    where.fail(1, 1, "B has shape " + Matrix<Exact>::shape_text(b) + ", expected " +
                         std::to_string(e) + "x" + std::to_string(o));
  }
  GramForm standard = make_standard_gram(b, flavor);
  Matrix<Exact> even = get("even_block").value_or(standard.even_block);
  Matrix<Exact> odd = get("odd_block").value_or(standard.odd_block);
  if (even.rows() == 0 && even.cols() == 0) even = Matrix<Exact>(e, e);
  if (odd.rows() == 0 && odd.cols() == 0) odd = Matrix<Exact>(o, o);
  if (even.rows() != e || even.cols() != e) where.fail(1, 1, "even_block has the wrong shape");
  if (odd.rows() != o || odd.cols() != o) where.fail(1, 1, "odd_block has the wrong shape");
  try {
    return make_gram(flavor, even, odd, b);
  } catch (const InputError& err) {
    where.fail(1, 1, err.what());
  }
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

GramForm parse_text(std::string_view content, const Located& where) {
  RawForm raw;
  std::vector<std::string> lines;
  {
    std::string line;
    std::istringstream in{std::string(content)};
    while (std::getline(in, line)) lines.push_back(line);
  }
  std::string current_matrix;
  std::vector<std::vector<Exact>> rows;
  auto flush = [&]() {
    if (current_matrix.empty()) return;
    Matrix<Exact> m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
    raw.matrices[current_matrix] = m;
    current_matrix.clear();
    rows.clear();
  };

  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::string line = lines[li];
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const std::size_t line_no = li + 1;
    if (auto colon = body.find(':'); colon != std::string::npos) {
      flush();
      const std::string key = trim(body.substr(0, colon));
      const std::string value = trim(body.substr(colon + 1));
      if (key == "flavor") {
        raw.flavor = value;
        raw.flavor_line = line_no;
      } else if (key == "k" || key == "ell") {
        long v = 0;
        try {
          std::size_t used = 0;
          v = std::stol(value, &used);
          if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
          where.fail(line_no, line.find(':') + 2, "expected an integer for '" + key + "'");
        }
        (key == "k" ? raw.k : raw.ell) = v;
      } else if (key == "B" || key == "even_block" || key == "odd_block") {
        if (!value.empty()) where.fail(line_no, line.find(':') + 2, "matrix rows start on the next line");
        current_matrix = key;
        raw.matrices[key] = Matrix<Exact>();
      } else {
        where.fail(line_no, 1, "unknown field '" + key + "'");
      }
      continue;
    }
    if (current_matrix.empty()) where.fail(line_no, 1, "matrix row outside a matrix section");
    std::vector<Exact> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos >= line.size()) break;
      std::size_t start = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      std::string token = line.substr(start, pos - start);
      try {
        row.push_back(parse_exact(token));
      } catch (const ScalarSyntaxError& err) {
        where.fail(line_no, start + err.column(), err.what());
      }
    }
    if (!rows.empty() && rows.front().size() != row.size()) {
      where.fail(line_no, 1, "row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  flush();
  return assemble(raw, where);
}

Matrix<Exact> json_matrix(const json& j, const std::string& key, const Located& where) {
  if (!j.is_array()) where.fail(1, 1, "'" + key + "' must be a list of rows");
  std::vector<std::vector<Exact>> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const json& row = j[r];
    if (!row.is_array()) where.fail(1, 1, "'" + key + "' row " + std::to_string(r + 1) + " is not a list");
    std::vector<Exact> out;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const json& x = row[c];
      try {
        if (x.is_string()) {
          out.push_back(parse_exact(x.get<std::string>()));
        } else if (x.is_number_integer()) {
          out.push_back(Exact(x.get<long>()));
        } else {
          throw InputError("entry must be a scalar string or integer");
        }
      } catch (const InputError& err) {
        where.fail(1, 1, key + "[" + std::to_string(r) + "][" + std::to_string(c) + "]: " + err.what());
      }
    }
    if (!rows.empty() && rows.front().size() != out.size()) {
      where.fail(1, 1, "'" + key + "' is ragged");
    }
    rows.push_back(std::move(out));
  }
  Matrix<Exact> m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

GramForm parse_json(std::string_view content, const Located& where) {
  json j;
  try {
    j = json::parse(content);
  } catch (const json::parse_error& err) {
    where.fail(1, err.byte, std::string("invalid JSON: ") + err.what());
  }
  if (!j.is_object()) where.fail(1, 1, "JSON form must be an object");
  RawForm raw;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key == "flavor") {
      if (!it->is_string()) where.fail(1, 1, "'flavor' must be a string");
      raw.flavor = it->get<std::string>();
    } else if (key == "k" || key == "ell") {
      if (!it->is_number_integer()) where.fail(1, 1, "'" + key + "' must be an integer");
      (key == "k" ? raw.k : raw.ell) = it->get<long>();
    } else if (key == "B" || key == "even_block" || key == "odd_block") {
      raw.matrices[key] = json_matrix(*it, key, where);
    } else {
      where.fail(1, 1, "unknown field '" + key + "'");
    }
  }
  return assemble(raw, where);
}

json matrix_json(const Matrix<Exact>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

GramForm parse_form(std::string_view content, const std::string& source) {
  Located where{source};
  for (char ch : content) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '{') return parse_json(content, where);
    break;
  }
  return parse_text(content, where);
}

GramForm load_form(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open form file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_form(buf.str(), path.string());
}

std::string format_matrix(const Matrix<Exact>& m, const std::string& indent) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells.push_back(to_string(m(r, c)));
      width = std::max(width, cells.back().size());
    }
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << indent;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string& cell = cells[r * m.cols() + c];
      if (c) os << ' ';
      os << std::string(width - cell.size(), ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

std::string format_matrix(const Matrix<Approx>& m, const std::string& indent) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << indent;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << to_string(m(r, c), 36);
    }
    os << '\n';
  }
  return os.str();
}

namespace {

bool is_skew(const GramForm& g) { return g.flavor == Flavor::SkewSupersymmetric; }

}  // namespace

std::string format_form_text(const GramForm& g) {
  const SuperDims d = g.dims();
  std::ostringstream os;
  os << "flavor: " << (is_skew(g) ? "skew" : "supersymmetric") << '\n';
  os << "k: " << d.k << '\n';
  os << "ell: " << d.ell() << '\n';
  os << "B:\n" << format_matrix(g.coupling);
  if (!is_standard(g)) {
    os << "even_block:\n" << format_matrix(g.even_block);
    os << "odd_block:\n" << format_matrix(g.odd_block);
  }
  return os.str();
}

std::string format_form_json(const GramForm& g) {
  const SuperDims d = g.dims();
  json j;
  j["flavor"] = is_skew(g) ? "skew" : "supersymmetric";
  j["k"] = d.k;
  j["ell"] = d.ell();
  j["B"] = matrix_json(g.coupling);
  if (!is_standard(g)) {
    j["even_block"] = matrix_json(g.even_block);
    j["odd_block"] = matrix_json(g.odd_block);
  }
  return j.dump(2) + "\n";
}

}  // namespace superform
