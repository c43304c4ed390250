// SPDX-License-Identifier: Apache-2.0
//
// airs: placement and passive beamforming for aerial reflecting surfaces
// Copyright (C) 2026 The airs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef AIRS_PARALLEL_HPP
#define AIRS_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace airs
{

/// Worker count from AIRS_THREADS (0 or unset means hardware concurrency). Always >= 1.
unsigned thread_count();

/// Calls fn(i) for i in [0, n). Work is split into contiguous blocks; fn must only write
/// to slot i of caller-owned storage so the result does not depend on scheduling.
/// The first exception thrown by any worker is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn);

} // namespace airs

#endif
