// Copyright Contributors to the uvhfield Project
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace uvh {

// Worker count: UVH_THREADS env var caps hardware concurrency.
inline int worker_count() {
  static int n = [] {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("UVH_THREADS")) {
      int cap = std::atoi(env);
      if (cap > 0) hw = std::min(hw, cap);
    }
    return hw;
  }();
  return n;
}

// Minimal persistent pool. Work is split into fixed-size chunks claimed off a
// shared counter; chunk boundaries do not depend on the thread count, so any
// per-chunk output written to disjoint slots is reproducible regardless of
// UVH_THREADS.
class ThreadPool {
 public:
  static ThreadPool& instance() {
    static ThreadPool pool(worker_count());
    return pool;
  }

  ~ThreadPool() {
    {
      std::unique_lock lock(mutex_);
      stop_ = true;
    }
    cv_.notify_all();
    for (auto& t : threads_) t.join();
  }

  // fn(begin, end) over [0, n) in chunks of chunk_size.
  void parallel_for(int64_t n, int64_t chunk_size, const std::function<void(int64_t, int64_t)>& fn) {
    if (n <= 0) return;
    if (threads_.empty() || n <= chunk_size) {
      fn(0, n);
      return;
    }
    std::unique_lock lock(mutex_);
    job_ = &fn;
    total_ = n;
    chunk_ = chunk_size;
    cursor_.store(0, std::memory_order_relaxed);
    pending_ = static_cast<int>(threads_.size());
    generation_++;
    cv_.notify_all();
    // The caller participates too.
    lock.unlock();
    run_chunks(fn);
    lock.lock();
    done_cv_.wait(lock, [this] { return pending_ == 0; });
    job_ = nullptr;
  }

 private:
  explicit ThreadPool(int workers) {
    for (int i = 1; i < workers; ++i) {
      threads_.emplace_back([this] { worker_loop(); });
    }
  }

  void worker_loop() {
    uint64_t seen = 0;
    for (;;) {
      const std::function<void(int64_t, int64_t)>* job = nullptr;
      {
        std::unique_lock lock(mutex_);
        cv_.wait(lock, [&] { return stop_ || generation_ != seen; });
        if (stop_) return;
        seen = generation_;
        job = job_;
      }
      if (job) run_chunks(*job);
      {
        std::unique_lock lock(mutex_);
        if (--pending_ == 0) done_cv_.notify_all();
      }
    }
  }

  void run_chunks(const std::function<void(int64_t, int64_t)>& fn) {
    for (;;) {
      int64_t begin = cursor_.fetch_add(chunk_, std::memory_order_relaxed);
      if (begin >= total_) break;
      fn(begin, std::min(begin + chunk_, total_));
    }
  }

  std::vector<std::thread> threads_;
  std::mutex mutex_;
  std::condition_variable cv_, done_cv_;
  const std::function<void(int64_t, int64_t)>* job_ = nullptr;
  std::atomic<int64_t> cursor_{0};
  int64_t total_ = 0, chunk_ = 0;
  int pending_ = 0;
  uint64_t generation_ = 0;
  bool stop_ = false;
};

inline void parallel_for(int64_t n, int64_t chunk_size, const std::function<void(int64_t, int64_t)>& fn) {
  ThreadPool::instance().parallel_for(n, chunk_size, fn);
}

}  // namespace uvh
