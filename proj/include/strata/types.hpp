// Copyright 2026-present the strata project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace strata {

// Row-major throughout: rows are vectors, matching the on-disk formats.
using RowMatrixXf =
    Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowMatrixXu =
    Eigen::Matrix<std::uint32_t, Eigen::Dynamic, Eigen::Dynamic,
                  Eigen::RowMajor>;

using ConstVecMap = Eigen::Map<const Eigen::VectorXf>;

constexpr std::uint32_t kInvalidId = 0xFFFFFFFFu;

/// (distance, id) pair ordered by distance, ties by smaller id.
struct Neighbor {
  float dist = 0.0f;
  std::uint32_t id = kInvalidId;

  friend bool operator<(const Neighbor& a, const Neighbor& b) {
    if (a.dist != b.dist) return a.dist < b.dist;
    return a.id < b.id;
  }
  friend bool operator==(const Neighbor& a, const Neighbor& b) {
    return a.dist == b.dist && a.id == b.id;
  }
};

}  // namespace strata
