#pragma once

#include <cstddef>
#include <functional>

namespace lipext {

// Worker count: LIPEXT_THREADS if set, else hardware concurrency.
std::size_t thread_count();

// Splits [0, n) into contiguous chunks, one per worker. Chunk boundaries
// depend only on n and the worker count.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t begin, std::size_t end, std::size_t chunk)>& body,
                  std::size_t min_chunk = 64);

std::size_t chunk_count(std::size_t n, std::size_t min_chunk = 64);

}  // namespace lipext
