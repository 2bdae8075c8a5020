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
#pragma once

#include <string>

#include "json.hpp"

#include "graphon/graphon_model.hpp"

namespace lggnn {

/// Keys: kind, and per kind p | k,p,q | P,weights | dim,t | grid. Optional
/// delta_w and name.
GraphonModel graphon_from_json(const nlohmann::json& doc);
GraphonModel graphon_from_text(const std::string& text);
GraphonModel graphon_from_file(const std::string& path);

/// Built-in presets: ssbm6, sbm10, geometric, example61.
GraphonModel graphon_preset(const std::string& name);
/// A preset name or a path to a spec file.
GraphonModel graphon_resolve(const std::string& preset_or_path);

nlohmann::json graphon_to_json(const GraphonModel& model);

/// The 10-community connection matrix used in the synthetic tables.
Eigen::MatrixXd sbm10_matrix();

}  // namespace lggnn
