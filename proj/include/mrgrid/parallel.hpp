/*
* Copyright 2026 The mrgrid Authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#pragma once

#include <functional>

namespace mrgrid {

// 0 means: MRGRID_THREADS if set and positive, else the hardware concurrency.
unsigned resolve_threads(unsigned requested);

// Runs body(worker_index) on `threads` workers and joins them. The first
// exception thrown by any worker is rethrown after the join.
void run_workers(unsigned threads, const std::function<void(unsigned)>& body);

} // namespace mrgrid
