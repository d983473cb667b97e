// Copyright 2026  The nites authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABILITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef NITES_PARALLEL_HPP_
#define NITES_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace nites {

// Worker count used for a request of `requested` threads.
// NITES_THREADS in the environment wins, then the request, then the
// machine's hardware concurrency. A request of 0 means "auto".
int resolve_threads(int requested);

// Runs fn(i) for i in [0, n) on up to `threads` workers. Work is
// partitioned by index; results must be written to per-index slots so the
// outcome is independent of scheduling. The first exception thrown by any
// worker is rethrown on the calling thread.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace nites

#endif  // NITES_PARALLEL_HPP_
