#include "tuav/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace tuav {

unsigned default_thread_count()
{
    if (char const* env = std::getenv("TUAV_PLACE_THREADS"))
    {
        try
        {
            long const v = std::stol(env);
            if (v > 0)
                return static_cast<unsigned>(v);
        }
        catch (std::exception const&)
        {
            // fall through to auto
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, std::function<void(std::size_t, std::size_t)> const& body,
                  unsigned threads)
{
    if (n == 0)
        return;
    if (threads == 0)
        threads = default_thread_count();
    std::size_t const workers = std::min<std::size_t>(threads, n);
    if (workers <= 1)
    {
        body(0, n);
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t const chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w)
    {
        std::size_t const begin = w * chunk;
        std::size_t const end = std::min(n, begin + chunk);
        if (begin >= end)
            break;
        pool.emplace_back([&, begin, end] {
            try
            {
                body(begin, end);
            }
            catch (...)
            {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

}  // namespace tuav
