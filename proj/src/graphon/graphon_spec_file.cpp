/*
 * Copyright (c) 2026, The lggnn Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "graphon/graphon_spec_file.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "common/errors.hpp"

namespace lggnn {
namespace {

using nlohmann::json;

Eigen::MatrixXd matrix_from_json(const json& rows, const char* key) {
  if (!rows.is_array() || rows.empty()) {
    throw ConfigError(std::string("'") + key + "' must be a nonempty array of rows");
  }
  const auto k = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd M(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != k) {
      throw ConfigError(std::string("'") + key + "' must be square");
    }
    for (Eigen::Index j = 0; j < k; ++j) M(i, j) = row[static_cast<std::size_t>(j)].get<double>();
  }
  return M;
}

json matrix_to_json(const Eigen::MatrixXd& M) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
T required(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ConfigError(std::string("graphon spec is missing '") + key + "'");
  return doc.at(key).get<T>();
}

}  // namespace

Eigen::MatrixXd sbm10_matrix() {
  Eigen::MatrixXd P(10, 10);
  P << 0.9949, 0.3084, 0.4553, 0.3747, 0.6187, 0.0052, 0.2626, 0.5787, 0.4540, 0.6768,
       0.3084, 0.8309, 0.6851, 0.0571, 0.5225, 0.3345, 0.1279, 0.0197, 0.7063, 0.7795,
       0.4553, 0.6851, 0.7854, 0.1000, 0.7726, 0.1882, 0.1736, 0.6723, 0.3278, 0.6033,
       0.3747, 0.0571, 0.1000, 0.6160, 0.1168, 0.0965, 0.0021, 0.1856, 0.3248, 0.4507,
       0.6187, 0.5225, 0.7726, 0.1168, 0.8614, 0.5492, 0.1098, 0.4278, 0.6386, 0.1171,
       0.0052, 0.3345, 0.1882, 0.0965, 0.5492, 0.6623, 0.4277, 0.0070, 0.1145, 0.2878,
       0.2626, 0.1279, 0.1736, 0.0021, 0.1098, 0.4277, 0.5528, 0.2016, 0.5466, 0.0410,
       0.5787, 0.0197, 0.6723, 0.1856, 0.4278, 0.0070, 0.2016, 0.8805, 0.5233, 0.0777,
       0.4540, 0.7063, 0.3278, 0.3248, 0.6386, 0.1145, 0.5466, 0.5233, 0.9510, 0.4890,
       0.6768, 0.7795, 0.6033, 0.4507, 0.1171, 0.2878, 0.0410, 0.0777, 0.4890, 0.8526;
  return P;
}

GraphonModel graphon_from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("graphon spec must be an object");
  const std::string kind = required<std::string>(doc, "kind");
  try {
    GraphonModel model = [&]() {
      if (kind == "constant") return GraphonModel::constant(required<double>(doc, "p"));
      if (kind == "ssbm") {
        return GraphonModel::ssbm(required<int>(doc, "k"), required<double>(doc, "p"),
                                  required<double>(doc, "q"));
      }
      if (kind == "sbm") {
        if (!doc.contains("P")) throw ConfigError("graphon spec is missing 'P'");
        std::vector<double> weights;
        if (doc.contains("weights")) weights = doc.at("weights").get<std::vector<double>>();
        return GraphonModel::sbm(matrix_from_json(doc.at("P"), "P"), std::move(weights));
      }
      if (kind == "geometric") {
        return GraphonModel::geometric(required<int>(doc, "dim"), required<double>(doc, "t"));
      }
      if (kind == "piecewise") {
        if (!doc.contains("grid")) throw ConfigError("graphon spec is missing 'grid'");
        return GraphonModel::piecewise(matrix_from_json(doc.at("grid"), "grid"));
      }
      throw UnsupportedModelError("unknown graphon kind '" + kind + "'");
    }();
    if (doc.contains("name")) model.set_name(doc.at("name").get<std::string>());
    if (doc.contains("delta_w")) model.set_delta_w(doc.at("delta_w").get<double>());
    model.validate();
    return model;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad graphon spec: ") + e.what());
  }
}

GraphonModel graphon_from_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("graphon spec: ") + e.what(), 0);
  }
  return graphon_from_json(doc);
}

GraphonModel graphon_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graphon spec '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return graphon_from_text(ss.str());
}

GraphonModel graphon_preset(const std::string& name) {
  GraphonModel m = [&]() {
    if (name == "ssbm6") return GraphonModel::ssbm(6, 0.8, 0.2);
    if (name == "sbm10") return GraphonModel::sbm(sbm10_matrix());
    if (name == "geometric") return GraphonModel::geometric(11, 0.2);
    if (name == "example61") {
      Eigen::MatrixXd P(2, 2);
      P << 0.5, 0.25, 0.25, 0.75;
      return GraphonModel::sbm(P);
    }
    throw UnsupportedModelError("unknown graphon preset '" + name + "'");
  }();
  m.set_name(name);
  return m;
}

GraphonModel graphon_resolve(const std::string& preset_or_path) {
  if (std::filesystem::exists(preset_or_path)) return graphon_from_file(preset_or_path);
  return graphon_preset(preset_or_path);
}

json graphon_to_json(const GraphonModel& model) {
  json doc;
  doc["kind"] = to_string(model.kind());
  doc["name"] = model.name();
  switch (model.kind()) {
    case GraphonKind::kConstant:
      doc["p"] = model.p();
      break;
    case GraphonKind::kSsbm:
      doc["k"] = model.block_count();
      doc["p"] = model.p();
      doc["q"] = model.q();
      break;
    case GraphonKind::kSbm:
      doc["P"] = matrix_to_json(model.block_matrix());
      if (!model.equal_weights()) doc["weights"] = model.weights();
      break;
    case GraphonKind::kGeometric:
      doc["dim"] = model.sphere_dim();
      doc["t"] = model.threshold();
      break;
    case GraphonKind::kPiecewise:
      doc["grid"] = matrix_to_json(model.block_matrix());
      break;
  }
  if (model.delta_w()) doc["delta_w"] = *model.delta_w();
  return doc;
}

}  // namespace lggnn
