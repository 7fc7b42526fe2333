#pragma once

#include "rotayb/lie_algebra.hpp"
#include "rotayb/quadratic.hpp"
#include "rotayb/tensor.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace rotayb::io {

using Json = nlohmann::ordered_json;

/// Algebra document before validation, so that invalid tables can still be
/// diagnosed.
struct AlgebraDocument {
  std::string name;
  std::vector<std::string> labels;
  BracketTable table;
};

Json to_json(const LieAlgebra &algebra, const std::string &name = {});
Json to_json(const BilinearForm &form, const std::string &name = {});
Json to_json(const Tensor2 &tensor, const std::string &name = {});
/// Operator matrix, column-major, tagged with its convention.
Json operator_to_json(const Matrix &op, const std::string &name = {});
/// Sparse nonzero term list, for diagnostics only.
Json to_json(const Tensor3 &tensor);

/// All readers throw Error(ParseError) on unknown fields, wrong kinds,
/// out-of-range indices, or malformed scalars. `dim`, when given, must match
/// the document's dimension.
AlgebraDocument read_algebra_document(const Json &doc);
LieAlgebra read_algebra(const Json &doc);
BilinearForm read_form(const Json &doc, std::optional<std::size_t> dim = {});
Tensor2 read_tensor(const Json &doc, std::optional<std::size_t> dim = {});
Matrix read_operator(const Json &doc, std::optional<std::size_t> dim = {});

/// Throws Error(ParseError) when the file is missing or not valid JSON.
Json load(const std::filesystem::path &path);
void save(const std::filesystem::path &path, const Json &doc);

/// "2 e - 1/2 h_t", or "0".
std::string format_element(const Vector &v, const std::vector<std::string> &labels);
/// "span{...}" of echelon basis rows.
std::string format_subspace(const Subspace &s, const std::vector<std::string> &labels);

} // namespace rotayb::io
