#ifndef RSTHL_VERIFY_MODEL_HPP
#define RSTHL_VERIFY_MODEL_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rsthl/lightlike/submanifold.hpp"

namespace rsthl {

/// A left-invariant model: ambient Lie algebra with an almost contact B-metric
/// structure and a half lightlike subalgebra given by caller-chosen vectors.
///
/// JSON layout (all scalars are expression strings in mu):
///   {"name": ..., "parameters": ["mu"], "frame": [labels],
///    "brackets": [{"pair": [a, b], "value": {label: scalar}}],
///    "metric": [[scalar]], "structure": {"phi": {label: {label: scalar}},
///    "xi": {label: scalar}, "eta": {label: scalar}},
///    "submanifold": {"screen": [{"label": ..., "vector": {...}}],
///    "xi": {...}, "L": {...}, "N": {...}}}
/// Vectors are sparse maps from frame labels to components; "phi" maps each
/// frame label to its image; "N" is optional.
struct ModelFile {
  std::string name;
  std::vector<std::string> parameters;
  LieAlgebra<Scalar> algebra;
  ACBMStructure structure;
  SubmanifoldData submanifold;

  const Frame& frame() const { return algebra.frame; }
  LieModel model() const { return {algebra, structure}; }

  friend bool operator==(const ModelFile& a, const ModelFile& b);
};

/// Schema-validates and parses a model document. Throws Error(SchemaViolation)
/// naming the offending field path, or ParseError with the field path and
/// offset of a malformed scalar.
ModelFile model_from_json(const nlohmann::json& doc);

/// Deterministic JSON form; model_from_json(model_to_json(m)) == m.
nlohmann::json model_to_json(const ModelFile& m);

/// Reads and parses a model file. Throws Error(IoError) when unreadable.
ModelFile load_model(const std::filesystem::path& path);

/// Writes the deterministic JSON form.
void save_model(const ModelFile& m, const std::filesystem::path& path);

/// The five-dimensional product group example: a Kaehler-Norden four-dimensional
/// group times the real line, with the three-dimensional subalgebra
/// E1 = X2, E2 = X4, xi = -mu X3 + mu E and L = X1. With no value mu stays
/// symbolic; otherwise it is specialised. Throws Error(MuZero) for mu = 0.
ModelFile builtin_example47(const std::optional<Rational>& mu = std::nullopt);

/// Frame metric diag(1, 1, -1, -1) on X1..X4 extended by g(E, E) = 1, or the
/// alternating diag(1, -1, 1, -1) reading when `alternating` is set.
BilinearForm<Scalar> example47_metric(bool alternating);

}  // namespace rsthl

#endif  // RSTHL_VERIFY_MODEL_HPP
