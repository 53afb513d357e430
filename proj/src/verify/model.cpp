#include "rsthl/verify/model.hpp"

#include <fstream>
#include <sstream>

#include "rsthl/error.hpp"
#include "rsthl/scalar/parse.hpp"

namespace rsthl {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& message) {
  throw Error(ErrorCode::SchemaViolation, path + ": " + message);
}

class Reader {
public:
  explicit Reader(bool mu_declared) : mu_declared_(mu_declared) {}

  const json& field(const json& obj, const std::string& key, const std::string& path) const {
    if (!obj.is_object()) schema(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) schema(join(path, key), "missing required field");
    return *it;
  }

  Scalar scalar(const json& j, const std::string& path) const {
    if (!j.is_string()) schema(path, "expected a scalar expression string");
    Scalar value;
    try {
      value = parse_scalar(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(path, e.position(), e.message());
    }
    if (!mu_declared_ && !value.is_constant()) schema(path, "uses mu, which is not a declared parameter");
    return value;
  }

  Vector<Scalar> vector(const json& j, const Frame& frame, const std::string& path) const {
    if (!j.is_object()) schema(path, "expected an object mapping frame labels to scalars");
    Vector<Scalar> v = Vector<Scalar>::Zero(static_cast<Eigen::Index>(frame.dimension()));
    for (auto it = j.begin(); it != j.end(); ++it) {
      const auto idx = frame.index_of(it.key());
      if (!idx) schema(join(path, it.key()), "unknown frame label");
      v(static_cast<Eigen::Index>(*idx)) = scalar(it.value(), join(path, it.key()));
    }
    return v;
  }

  static std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }

private:
  bool mu_declared_;
};

json vector_to_json(const Vector<Scalar>& v, const Frame& frame) {
  json out = json::object();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) out[frame.label(static_cast<std::size_t>(i))] = v(i).to_string();
  return out;
}

}  // namespace

bool operator==(const ModelFile& a, const ModelFile& b) {
  const auto& sa = a.submanifold;
  const auto& sb = b.submanifold;
  auto same_vectors = [](const std::vector<Vector<Scalar>>& x, const std::vector<Vector<Scalar>>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != y[i]) return false;
    return true;
  };
  return a.name == b.name && a.parameters == b.parameters && a.algebra.frame == b.algebra.frame &&
         a.algebra.constants == b.algebra.constants && a.structure.phi == b.structure.phi &&
         a.structure.xi == b.structure.xi && a.structure.eta == b.structure.eta &&
         a.structure.metric == b.structure.metric && sa.screen_labels == sb.screen_labels &&
         same_vectors(sa.screen, sb.screen) && sa.xi == sb.xi && sa.L == sb.L && sa.N.has_value() == sb.N.has_value() &&
         (!sa.N || *sa.N == *sb.N);
}

ModelFile model_from_json(const json& doc) {
  if (!doc.is_object()) schema("(root)", "expected an object");
  ModelFile m;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) schema("name", "expected a string");
    m.name = it->get<std::string>();
  }
  bool mu_declared = false;
  if (auto it = doc.find("parameters"); it != doc.end()) {
    if (!it->is_array()) schema("parameters", "expected an array of names");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& p = (*it)[i];
      const std::string path = "parameters[" + std::to_string(i) + "]";
      if (!p.is_string()) schema(path, "expected a string");
      if (p.get<std::string>() != "mu") schema(path, "unsupported parameter '" + p.get<std::string>() + "'");
      mu_declared = true;
      m.parameters.push_back("mu");
    }
  }
  const Reader r(mu_declared);

  const json& labels = r.field(doc, "frame", "");
  if (!labels.is_array() || labels.empty()) schema("frame", "expected a non-empty array of labels");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].is_string()) schema("frame[" + std::to_string(i) + "]", "expected a string");
    names.push_back(labels[i].get<std::string>());
  }
  Frame frame;
  try {
    frame = Frame(names);
  } catch (const Error& e) {
    schema("frame", e.what());
  }
  const auto d = static_cast<Eigen::Index>(frame.dimension());
  m.algebra = LieAlgebra<Scalar>::abelian(frame);

  const json& brackets = r.field(doc, "brackets", "");
  if (!brackets.is_array()) schema("brackets", "expected an array");
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    const std::string path = "brackets[" + std::to_string(i) + "]";
    const json& pair = r.field(brackets[i], "pair", path);
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      schema(path + ".pair", "expected two frame labels");
    const auto a = frame.index_of(pair[0].get<std::string>());
    const auto b = frame.index_of(pair[1].get<std::string>());
    if (!a || !b) schema(path + ".pair", "unknown frame label");
    if (*a == *b) schema(path + ".pair", "a bracket of a vector with itself is zero");
    m.algebra.set_bracket(static_cast<Eigen::Index>(*a), static_cast<Eigen::Index>(*b),
                          r.vector(r.field(brackets[i], "value", path), frame, path + ".value"));
  }

  const json& metric = r.field(doc, "metric", "");
  if (!metric.is_array() || static_cast<Eigen::Index>(metric.size()) != d)
    schema("metric", "expected " + std::to_string(d) + " rows");
  m.structure.metric = BilinearForm<Scalar>(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const json& row = metric[static_cast<std::size_t>(i)];
    const std::string path = "metric[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d)
      schema(path, "expected " + std::to_string(d) + " entries");
    for (Eigen::Index j = 0; j < d; ++j)
      m.structure.metric(i, j) = r.scalar(row[static_cast<std::size_t>(j)], path + "[" + std::to_string(j) + "]");
  }

  const json& st = r.field(doc, "structure", "");
  const json& phi = r.field(st, "phi", "structure");
  if (!phi.is_object()) schema("structure.phi", "expected an object mapping labels to images");
  m.structure.phi = LinearOperator<Scalar>::Zero(d, d);
  for (auto it = phi.begin(); it != phi.end(); ++it) {
    const auto idx = frame.index_of(it.key());
    if (!idx) schema("structure.phi." + it.key(), "unknown frame label");
    m.structure.phi.col(static_cast<Eigen::Index>(*idx)) = r.vector(it.value(), frame, "structure.phi." + it.key());
  }
  m.structure.xi = r.vector(r.field(st, "xi", "structure"), frame, "structure.xi");
  m.structure.eta = r.vector(r.field(st, "eta", "structure"), frame, "structure.eta").transpose();

  const json& sub = r.field(doc, "submanifold", "");
  const json& screen = r.field(sub, "screen", "submanifold");
  if (!screen.is_array()) schema("submanifold.screen", "expected an array");
  for (std::size_t i = 0; i < screen.size(); ++i) {
    const std::string path = "submanifold.screen[" + std::to_string(i) + "]";
    const json& label = r.field(screen[i], "label", path);
    if (!label.is_string()) schema(path + ".label", "expected a string");
    m.submanifold.screen_labels.push_back(label.get<std::string>());
    m.submanifold.screen.push_back(r.vector(r.field(screen[i], "vector", path), frame, path + ".vector"));
  }
  m.submanifold.xi = r.vector(r.field(sub, "xi", "submanifold"), frame, "submanifold.xi");
  m.submanifold.L = r.vector(r.field(sub, "L", "submanifold"), frame, "submanifold.L");
  if (auto it = sub.find("N"); it != sub.end()) m.submanifold.N = r.vector(*it, frame, "submanifold.N");
  return m;
}

json model_to_json(const ModelFile& m) {
  const Frame& frame = m.frame();
  const auto d = static_cast<Eigen::Index>(frame.dimension());
  json doc = json::object();
  if (!m.name.empty()) doc["name"] = m.name;
  doc["parameters"] = m.parameters;
  doc["frame"] = frame.labels();

  json brackets = json::array();
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j) {
      const Vector<Scalar> v = m.algebra.bracket(i, j);
      if (all_zero(v)) continue;
      brackets.push_back({{"pair", {frame.label(static_cast<std::size_t>(i)), frame.label(static_cast<std::size_t>(j))}},
                          {"value", vector_to_json(v, frame)}});
    }
  doc["brackets"] = brackets;

  json metric = json::array();
  for (Eigen::Index i = 0; i < d; ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < d; ++j) row.push_back(m.structure.metric(i, j).to_string());
    metric.push_back(row);
  }
  doc["metric"] = metric;

  json phi = json::object();
  for (Eigen::Index j = 0; j < d; ++j) {
    const Vector<Scalar> image = m.structure.phi.col(j);
    if (!all_zero(image)) phi[frame.label(static_cast<std::size_t>(j))] = vector_to_json(image, frame);
  }
  doc["structure"] = {{"phi", phi},
                      {"xi", vector_to_json(m.structure.xi, frame)},
                      {"eta", vector_to_json(m.structure.eta.transpose(), frame)}};

  json screen = json::array();
  for (std::size_t i = 0; i < m.submanifold.screen.size(); ++i)
    screen.push_back({{"label", m.submanifold.screen_labels.at(i)},
                      {"vector", vector_to_json(m.submanifold.screen[i], frame)}});
  json sub = {{"screen", screen},
              {"xi", vector_to_json(m.submanifold.xi, frame)},
              {"L", vector_to_json(m.submanifold.L, frame)}};
  if (m.submanifold.N) sub["N"] = vector_to_json(*m.submanifold.N, frame);
  doc["submanifold"] = sub;
  return doc;
}

ModelFile load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaViolation, path.string() + ": not valid JSON (" + e.what() + ")");
  }
  return model_from_json(doc);
}

void save_model(const ModelFile& m, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << model_to_json(m).dump(2) << "\n";
}

BilinearForm<Scalar> example47_metric(bool alternating) {
  BilinearForm<Scalar> g = BilinearForm<Scalar>::Zero(5, 5);
  const long signs[2][4] = {{1, 1, -1, -1}, {1, -1, 1, -1}};
  for (int i = 0; i < 4; ++i) g(i, i) = Scalar(signs[alternating ? 1 : 0][i]);
  g(4, 4) = Scalar(1);
  return g;
}

ModelFile builtin_example47(const std::optional<Rational>& mu_value) {
  if (mu_value && *mu_value == 0) throw Error(ErrorCode::MuZero, "the example needs mu != 0");
  const Scalar mu = mu_value ? Scalar(*mu_value) : Scalar::mu();
  ModelFile m;
  m.name = "example47";
  if (!mu_value) m.parameters = {"mu"};

  const Frame frame({"X1", "X2", "X3", "X4", "E"});
  auto vec = [](std::initializer_list<std::pair<int, Scalar>> entries) {
    Vector<Scalar> v = Vector<Scalar>::Zero(5);
    for (const auto& [i, value] : entries) v(i) = value;
    return v;
  };
  m.algebra = LieAlgebra<Scalar>::abelian(frame);
  m.algebra.set_bracket(0, 1, vec({{3, Scalar(-2)}}));
  m.algebra.set_bracket(2, 3, vec({{3, Scalar(2)}}));
  m.algebra.set_bracket(0, 3, vec({{1, Scalar(2)}}));
  m.algebra.set_bracket(1, 2, vec({{1, Scalar(-2)}}));

  m.structure.metric = example47_metric(false);
  m.structure.phi = LinearOperator<Scalar>::Zero(5, 5);
  m.structure.phi(2, 0) = Scalar(1);
  m.structure.phi(3, 1) = Scalar(1);
  m.structure.phi(0, 2) = Scalar(-1);
  m.structure.phi(1, 3) = Scalar(-1);
  m.structure.xi = vec({{4, Scalar(1)}});
  m.structure.eta = vec({{4, Scalar(1)}}).transpose();

  m.submanifold.screen_labels = {"E1", "E2"};
  m.submanifold.screen = {vec({{1, Scalar(1)}}), vec({{3, Scalar(1)}})};
  m.submanifold.xi = vec({{2, -mu}, {4, mu}});
  m.submanifold.L = vec({{0, Scalar(1)}});
  return m;
}

}  // namespace rsthl
