#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace dtuple {

/// Runs body(item, acc) for item in [0, count) over `jobs` threads with
/// worker-local accumulators (items strided by worker index), then merges
/// them in worker order. Accumulators must merge associatively via +=, so
/// the result does not depend on the schedule.
template <class Acc, class MakeAcc, class Body>
Acc parallel_reduce(std::uint64_t count, unsigned jobs, MakeAcc make_acc, Body body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::uint64_t>(count, 1))));
  std::vector<Acc> partial;
  partial.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) partial.push_back(make_acc());
  if (jobs == 1) {
    for (std::uint64_t i = 0; i < count; ++i) body(i, partial[0]);
    return std::move(partial[0]);
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::uint64_t i = w; i < count; i += jobs) body(i, partial[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Acc out = std::move(partial[0]);
  for (unsigned w = 1; w < jobs; ++w) out += partial[w];
  return out;
}

}  // namespace dtuple
