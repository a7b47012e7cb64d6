// Copyright 2026 The mubgame Authors
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

#include <cstddef>
#include <cstdint>
#include <functional>

namespace mubgame {

/// MUBGAME_THREADS if set to a positive integer, otherwise the number of
/// hardware threads (at least 1).
std::size_t default_thread_count();

/// Runs body(0) ... body(count - 1) on up to `threads` workers (0 means
/// default_thread_count()). The first exception thrown by any task is rethrown
/// after all workers have joined. Tasks must write only to their own slots.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

/// splitmix64 finalizer; used to derive independent per-task seeds.
std::uint64_t mix_seed(std::uint64_t x);
/// Seed for task `index` under `master`.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t index);

}  // namespace mubgame
