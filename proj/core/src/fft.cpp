#include "hyperheat/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace hyperheat::fft {
namespace {

// The FFTW planner is not thread-safe; execution of distinct plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

class Plan {
public:
    Plan(int dimension, std::size_t points, Direction direction) {
        std::size_t total = 1;
        std::vector<int> dims(static_cast<std::size_t>(dimension), static_cast<int>(points));
        for (int d = 0; d < dimension; ++d) total *= points;
        size_ = total;
        buffer_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * total));
        if (buffer_ == nullptr) throw std::bad_alloc();
        std::lock_guard lock(planner_mutex());
        plan_ = fftw_plan_dft(dimension, dims.data(), buffer_, buffer_,
                              direction == Direction::forward ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
        if (plan_ == nullptr) {
            fftw_free(buffer_);
            throw std::runtime_error("fftw_plan_dft failed");
        }
    }

    Plan(const Plan&) = delete;
    Plan& operator=(const Plan&) = delete;

    ~Plan() {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan_);
        fftw_free(buffer_);
    }

    void execute(std::span<std::complex<double>> data) {
        std::memcpy(buffer_, data.data(), sizeof(fftw_complex) * size_);
        fftw_execute(plan_);
        std::memcpy(static_cast<void*>(data.data()), buffer_, sizeof(fftw_complex) * size_);
    }

private:
    fftw_plan plan_ = nullptr;
    fftw_complex* buffer_ = nullptr;
    std::size_t size_ = 0;
};

using Key = std::tuple<int, std::size_t, Direction>;

Plan& plan_for(int dimension, std::size_t points, Direction direction) {
    thread_local std::map<Key, std::unique_ptr<Plan>> cache;
    auto key = Key{dimension, points, direction};
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, std::make_unique<Plan>(dimension, points, direction)).first;
    }
    return *it->second;
}

}  // namespace

void transform(std::span<std::complex<double>> data, int dimension, std::size_t points, Direction direction) {
    std::size_t total = 1;
    for (int d = 0; d < dimension; ++d) total *= points;
    if (data.size() != total) throw std::invalid_argument("fft::transform: size does not match shape");
    plan_for(dimension, points, direction).execute(data);
}

}  // namespace hyperheat::fft
