// Copyright 2026 The pareto-cover Authors
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

namespace pareto_cover {

inline constexpr int kDefaultMaxCoverSize = 6;
inline constexpr int kHardMaxCoverSize = 12;

// Largest cover size accepted by the subset-indexed evaluator and the FPTAS.
// Reads PARETO_COVER_MAX_K when set; values above kHardMaxCoverSize are
// rejected with a ValidationError.
int max_cover_size();

// Throws ResourceError when k exceeds max_cover_size().
void require_cover_size(int k, const char* what);

}  // namespace pareto_cover
