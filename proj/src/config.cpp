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

#include "pareto_cover/config.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "pareto_cover/errors.hpp"

namespace pareto_cover {

int max_cover_size() {
  const char* env = std::getenv("PARETO_COVER_MAX_K");
  if (env == nullptr || *env == '\0') return kDefaultMaxCoverSize;
  const std::string_view text(env);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                         value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
    throw ValidationError("PARETO_COVER_MAX_K must be a positive integer");
  }
  if (value > kHardMaxCoverSize) {
    throw ValidationError("PARETO_COVER_MAX_K above the hard limit of " +
                          std::to_string(kHardMaxCoverSize));
  }
  return value;
}

void require_cover_size(int k, const char* what) {
  const int cap = max_cover_size();
  if (k > cap) {
    throw ResourceError(std::string(what) + ": cover size " +
                        std::to_string(k) + " exceeds the cap " +
                        std::to_string(cap) +
                        " (raise PARETO_COVER_MAX_K to allow more)");
  }
}

}  // namespace pareto_cover
