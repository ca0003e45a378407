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

#include "mrgrid/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace mrgrid {

unsigned resolve_threads(unsigned requested)
{
	if (requested > 0)
		return requested;
	if (const char* env = std::getenv("MRGRID_THREADS")) {
		char* end = nullptr;
		long v = std::strtol(env, &end, 10);
		if (end != env && *end == '\0' && v > 0)
			return static_cast<unsigned>(v);
	}
	unsigned hw = std::thread::hardware_concurrency();
	return hw == 0 ? 1 : hw;
}

void run_workers(unsigned threads, const std::function<void(unsigned)>& body)
{
	if (threads <= 1) {
		body(0);
		return;
	}
	std::exception_ptr first;
	std::mutex mu;
	std::vector<std::thread> pool;
	pool.reserve(threads);
	for (unsigned t = 0; t < threads; ++t) {
		pool.emplace_back([&, t] {
			try {
				body(t);
			} catch (...) {
				std::lock_guard lock(mu);
				if (!first)
					first = std::current_exception();
			}
		});
	}
	for (auto& th : pool)
		th.join();
	if (first)
		std::rethrow_exception(first);
}

} // namespace mrgrid
