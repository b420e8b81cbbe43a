// parallel.hpp: contiguous chunking of an index range over worker threads

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace fcoh::detail {

struct Chunk {
  std::size_t begin = 0;
  std::size_t end = 0;
};

inline std::vector<Chunk> split(std::size_t n, int workers) {
  const std::size_t w = std::max<std::size_t>(1, std::min<std::size_t>(n == 0 ? 1 : n, workers < 1 ? 1 : workers));
  std::vector<Chunk> chunks(w);
  for (std::size_t k = 0; k < w; ++k) chunks[k] = {n * k / w, n * (k + 1) / w};
  return chunks;
}

// Runs fn(chunk_index, chunk) for every chunk; the first exception is rethrown.
template <class Fn>
void run_chunks(const std::vector<Chunk>& chunks, Fn&& fn) {
  if (chunks.size() == 1) {
    fn(std::size_t{0}, chunks[0]);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks.size());
  std::vector<std::thread> threads;
  threads.reserve(chunks.size());
  for (std::size_t k = 0; k < chunks.size(); ++k) {
    threads.emplace_back([&, k] {
      try {
        fn(k, chunks[k]);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace fcoh::detail
