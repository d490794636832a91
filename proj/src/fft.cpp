#include "plcwt/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace plcwt {
namespace {

class PlanCache {
  public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan get(int n1, int n2, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto key = std::make_tuple(n1, n2, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        // Planned UNALIGNED so the plan can execute on any caller buffer.
        std::vector<Complex> scratch(static_cast<std::size_t>(n1) * n2);
        fftw_plan p = fftw_plan_dft_2d(
            n1, n2, reinterpret_cast<fftw_complex*>(scratch.data()),
            reinterpret_cast<fftw_complex*>(scratch.data()),
            sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw std::runtime_error("fftw plan creation failed");
        plans_.emplace(key, p);
        return p;
    }

  private:
    PlanCache() = default;
    std::mutex mutex_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

}  // namespace

void fft2_inplace(std::vector<Complex>& data, int n1, int n2, int sign) {
    if (data.size() != static_cast<std::size_t>(n1) * n2)
        throw std::invalid_argument("fft2_inplace: size mismatch");
    fftw_plan p = PlanCache::instance().get(n1, n2, sign);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data.data()),
                     reinterpret_cast<fftw_complex*>(data.data()));
}

}  // namespace plcwt
