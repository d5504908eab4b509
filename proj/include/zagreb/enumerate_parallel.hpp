#pragma once

#include <thread>
#include <vector>

namespace zagreb {

template <typename MakeVisitor>
std::uint64_t for_each_connected_parallel(const EnumSpec& spec, std::size_t workers, MakeVisitor&& make_visitor) {
  validate(spec);
  if (workers <= 1) {
    auto visit = make_visitor(std::size_t{0});
    detail::EdgeSearch search(spec);
    return search.run(visit, nullptr);
  }
  std::atomic<std::size_t> claims{0};
  std::vector<std::uint64_t> counts(workers, 0);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        auto visit = make_visitor(w);
        detail::EdgeSearch search(spec);
        counts[w] = search.run(visit, &claims);
      });
    }
  }
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

}  // namespace zagreb
