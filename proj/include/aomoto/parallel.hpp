#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace aomoto {

struct EngineOptions {
    unsigned workers = 1;
    std::uint64_t enumeration_cap = std::uint64_t{1} << 24;
};

/// Splits [0, count) into `workers` contiguous blocks, runs fn(begin, end) on each
/// (on separate threads when workers > 1) and returns the results in block order.
template <class Fn>
auto map_blocks(std::uint64_t count, unsigned workers, Fn fn) -> std::vector<decltype(fn(count, count))>
{
    using Result = decltype(fn(count, count));
    const std::uint64_t blocks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, count));
    std::vector<Result> results(blocks);
    auto bounds = [&](std::uint64_t b) { return count * b / blocks; };
    if (blocks == 1) {
        results[0] = fn(0, count);
        return results;
    }
    std::vector<std::exception_ptr> errors(blocks);
    std::vector<std::thread> threads;
    threads.reserve(blocks);
    for (std::uint64_t b = 0; b < blocks; ++b)
        threads.emplace_back([&, b] {
            try {
                results[b] = fn(bounds(b), bounds(b + 1));
            } catch (...) {
                errors[b] = std::current_exception();
            }
        });
    for (std::thread& t : threads)
        t.join();
    for (const std::exception_ptr& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

}  // namespace aomoto
