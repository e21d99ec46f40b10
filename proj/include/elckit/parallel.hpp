#ifndef ELCKIT_PARALLEL_HPP
#define ELCKIT_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace elckit {

/// Applies fn(i) for i in [0, count) and returns the results in index
/// order, so output is identical for any job count. With jobs <= 1 the
/// loop runs inline.
template <typename Fn>
auto parallel_map(std::size_t count, int jobs, Fn fn) {
    using R = decltype(fn(std::size_t{0}));
    std::vector<R> out(count);
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace elckit

#endif
