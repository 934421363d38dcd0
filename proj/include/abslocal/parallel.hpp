// Copyright 2026 The abslocal Authors
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

#include <cstddef>
#include <cstdint>
#include <functional>

namespace abslocal {

/// Worker count: hardware concurrency, capped by ABSLOCAL_THREADS when set.
unsigned worker_count();

/// Runs body(i) for i in [0, n) over contiguous chunks on worker threads.
/// Results must be written per index; callers reduce in index order so the
/// outcome does not depend on scheduling. Exceptions from the body are
/// rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Independent stream seed for work item `stream` under a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept;

}  // namespace abslocal
