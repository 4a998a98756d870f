#pragma once

#include <cstddef>
#include <functional>

namespace mbx {

/// Worker count: MBX_THREADS if set, else the configured value, else all cores.
std::size_t thread_count();
void set_thread_count(std::size_t n);

/// Runs body(worker, begin, end) over contiguous chunks of [0, n).
/// Chunk boundaries depend only on n and the worker count.
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace mbx
