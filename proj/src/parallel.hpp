// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>

namespace qwalk::detail {

/// Worker count: hardware concurrency, capped by QWALK_THREADS when set.
int thread_count();

/// Runs body(i) for i in [begin, end) over contiguous blocks. Each index is
/// visited exactly once; callers must not depend on visiting order.
/// `workers` of zero means thread_count().
void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t)>& body, int workers = 0);

}  // namespace qwalk::detail
