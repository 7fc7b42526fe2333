#include "rotayb/io.hpp"

#include "rotayb/error.hpp"

#include <fstream>
#include <set>

namespace rotayb::io {

namespace {

[[noreturn]] void fail(const std::string &what) { throw Error(ErrorCode::ParseError, what); }

void require_fields(const Json &obj, std::initializer_list<std::string_view> required,
                    std::initializer_list<std::string_view> optional, const std::string &where) {
  if (!obj.is_object())
    fail(where + ": expected an object");
  std::set<std::string_view> allowed(required);
  allowed.insert(optional.begin(), optional.end());
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      fail(where + ": unknown field '" + it.key() + "'");
  for (auto key : required)
    if (!obj.contains(std::string(key)))
      fail(where + ": missing field '" + std::string(key) + "'");
}

std::string header(const Json &doc, std::string_view kind) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    fail("document has no string 'kind' field");
  const auto actual = doc["kind"].get<std::string>();
  if (actual != kind)
    fail("expected a '" + std::string(kind) + "' document, found '" + actual + "'");
  if (doc.contains("name") && !doc["name"].is_string())
    fail("'name' must be a string");
  return doc.value("name", std::string{});
}

std::size_t read_dim(const Json &doc, std::optional<std::size_t> expected) {
  if (!doc["dim"].is_number_unsigned())
    fail("'dim' must be a non-negative integer");
  const auto dim = doc["dim"].get<std::size_t>();
  if (expected && *expected != dim)
    fail("document has dimension " + std::to_string(dim) + ", expected " +
         std::to_string(*expected));
  return dim;
}

std::size_t read_index(const Json &value, std::size_t dim, const std::string &where) {
  if (!value.is_number_unsigned())
    fail(where + ": index must be a non-negative integer");
  const auto i = value.get<std::size_t>();
  if (i >= dim)
    fail(where + ": index " + std::to_string(i) + " out of range for dimension " +
         std::to_string(dim));
  return i;
}

Scalar read_scalar(const Json &value, const std::string &where) {
  if (!value.is_string())
    fail(where + ": scalars are written as \"p/q\" strings");
  return parse_scalar(value.get<std::string>());
}

Json scalar_json(const Scalar &s) { return format_scalar(s); }

Json with_header(std::string_view kind, const std::string &name, std::size_t dim) {
  Json doc;
  doc["kind"] = kind;
  if (!name.empty())
    doc["name"] = name;
  doc["dim"] = dim;
  return doc;
}

Matrix read_square(const Json &rows, std::size_t dim, const std::string &where) {
  if (!rows.is_array() || rows.size() != dim)
    fail(where + ": expected " + std::to_string(dim) + " rows");
  Matrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!rows[r].is_array() || rows[r].size() != dim)
      fail(where + ": row " + std::to_string(r) + " must have " + std::to_string(dim) +
           " entries");
    for (std::size_t c = 0; c < dim; ++c)
      m(r, c) = read_scalar(rows[r][c], where);
  }
  return m;
}

} // namespace

Json to_json(const LieAlgebra &algebra, const std::string &name) {
  Json doc = with_header("algebra", name, algebra.dim());
  doc["basis"] = algebra.labels();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    for (std::size_t j = i + 1; j < algebra.dim(); ++j) {
      const Vector b = algebra.basis_bracket(i, j);
      if (is_zero(b))
        continue;
      Json terms = Json::array();
      for (std::size_t k = 0; k < b.size(); ++k)
        if (b[k] != 0)
          terms.push_back({{"k", k}, {"coeff", scalar_json(b[k])}});
      brackets.push_back({{"i", i}, {"j", j}, {"terms", terms}});
    }
  doc["brackets"] = brackets;
  return doc;
}

Json to_json(const BilinearForm &form, const std::string &name) {
  Json doc = with_header("form", name, form.dim());
  Json gram = Json::array();
  for (std::size_t r = 0; r < form.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < form.dim(); ++c)
      row.push_back(scalar_json(form.gram()(r, c)));
    gram.push_back(row);
  }
  doc["gram"] = gram;
  return doc;
}

Json to_json(const Tensor2 &tensor, const std::string &name) {
  Json doc = with_header("tensor2", name, tensor.dim());
  Json terms = Json::array();
  for (const auto &t : tensor.terms())
    terms.push_back({{"i", t.i}, {"j", t.j}, {"coeff", scalar_json(t.coeff)}});
  doc["terms"] = terms;
  return doc;
}

Json operator_to_json(const Matrix &op, const std::string &name) {
  Json doc = with_header("operator", name, op.cols());
  doc["convention"] = "columns-are-images";
  Json cols = Json::array();
  for (std::size_t c = 0; c < op.cols(); ++c) {
    Json col = Json::array();
    for (std::size_t r = 0; r < op.rows(); ++r)
      col.push_back(scalar_json(op(r, c)));
    cols.push_back(col);
  }
  doc["columns"] = cols;
  return doc;
}

Json to_json(const Tensor3 &tensor) {
  Json terms = Json::array();
  for (const auto &t : tensor.terms())
    terms.push_back({{"i", t.i}, {"j", t.j}, {"k", t.k}, {"coeff", scalar_json(t.coeff)}});
  return terms;
}

AlgebraDocument read_algebra_document(const Json &doc) {
  const std::string name = header(doc, "algebra");
  require_fields(doc, {"kind", "dim", "brackets"}, {"name", "basis"}, "algebra");
  const std::size_t n = read_dim(doc, {});

  std::vector<std::string> labels;
  if (doc.contains("basis")) {
    if (!doc["basis"].is_array() || doc["basis"].size() != n)
      fail("algebra: 'basis' must list " + std::to_string(n) + " labels");
    std::set<std::string> seen;
    for (const auto &l : doc["basis"]) {
      if (!l.is_string())
        fail("algebra: basis labels must be strings");
      if (!seen.insert(l.get<std::string>()).second)
        fail("algebra: duplicate basis label '" + l.get<std::string>() + "'");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      labels.push_back("e" + std::to_string(i));
  }

  // Entries with i < j define both orders. An entry with i >= j is taken
  // literally so that inconsistent tables reach validate().
  BracketTable table(n);
  std::set<std::pair<std::size_t, std::size_t>> explicit_entries;
  if (!doc["brackets"].is_array())
    fail("algebra: 'brackets' must be an array");
  for (const auto &entry : doc["brackets"]) {
    require_fields(entry, {"i", "j", "terms"}, {}, "bracket entry");
    const std::size_t i = read_index(entry["i"], n, "bracket entry");
    const std::size_t j = read_index(entry["j"], n, "bracket entry");
    if (!explicit_entries.insert({i, j}).second)
      fail("algebra: bracket (" + std::to_string(i) + ", " + std::to_string(j) +
           ") listed twice");
    if (!entry["terms"].is_array())
      fail("bracket entry: 'terms' must be an array");
    Vector value = zero_vector(n);
    for (const auto &term : entry["terms"]) {
      require_fields(term, {"k", "coeff"}, {}, "bracket term");
      value[read_index(term["k"], n, "bracket term")] += read_scalar(term["coeff"], "bracket term");
    }
    table.set(i, j, value);
    if (i < j && !explicit_entries.count({j, i}))
      table.set(j, i, -value);
  }
  return {name, std::move(labels), std::move(table)};
}

LieAlgebra read_algebra(const Json &doc) {
  AlgebraDocument d = read_algebra_document(doc);
  return LieAlgebra(std::move(d.labels), d.table);
}

BilinearForm read_form(const Json &doc, std::optional<std::size_t> dim) {
  header(doc, "form");
  require_fields(doc, {"kind", "dim", "gram"}, {"name"}, "form");
  const std::size_t n = read_dim(doc, dim);
  return BilinearForm(read_square(doc["gram"], n, "form gram"));
}

Tensor2 read_tensor(const Json &doc, std::optional<std::size_t> dim) {
  header(doc, "tensor2");
  require_fields(doc, {"kind", "dim", "terms"}, {"name"}, "tensor2");
  const std::size_t n = read_dim(doc, dim);
  if (!doc["terms"].is_array())
    fail("tensor2: 'terms' must be an array");
  std::vector<Tensor2::Term> terms;
  for (const auto &t : doc["terms"]) {
    require_fields(t, {"i", "j", "coeff"}, {}, "tensor term");
    terms.push_back({read_index(t["i"], n, "tensor term"), read_index(t["j"], n, "tensor term"),
                     read_scalar(t["coeff"], "tensor term")});
  }
  return Tensor2::from_terms(n, terms);
}

Matrix read_operator(const Json &doc, std::optional<std::size_t> dim) {
  header(doc, "operator");
  require_fields(doc, {"kind", "dim", "convention", "columns"}, {"name"}, "operator");
  const std::size_t n = read_dim(doc, dim);
  if (doc["convention"] != "columns-are-images")
    fail("operator: convention must be \"columns-are-images\"");
  // Stored column-major, so the rows of the document are the columns.
  return read_square(doc["columns"], n, "operator columns").transpose();
}

Json load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    fail("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    fail("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void save(const std::filesystem::path &path, const Json &doc) {
  std::ofstream out(path);
  if (!out)
    fail("cannot write '" + path.string() + "'");
  out << doc.dump(2) << '\n';
}

std::string format_element(const Vector &v, const std::vector<std::string> &labels) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0)
      continue;
    Scalar c = v[k];
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0)
        c = -c;
    }
    if (c != 1)
      out += format_scalar(c) + " ";
    out += k < labels.size() ? labels[k] : "e" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::string format_subspace(const Subspace &s, const std::vector<std::string> &labels) {
  std::string out = "span{";
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (r)
      out += ", ";
    out += format_element(s.basis().row(r), labels);
  }
  return out + "}";
}

} // namespace rotayb::io
