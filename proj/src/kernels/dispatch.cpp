#include <atomic>
#include <cstdlib>

#include "quatop/kernels.hpp"

namespace quatop::kernels {
namespace {

const Ops* detect() {
    if (const char* env = std::getenv("QUATOP_KERNELS")) {
        const std::string_view want(env);
        if (want == "scalar") return &scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
        if (want == "avx2" && __builtin_cpu_supports("avx2")) return &avx2_ops();
#endif
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) return &avx2_ops();
#endif
    return &scalar_ops();
}

std::atomic<const Ops*> g_active{nullptr};

}  // namespace

const Ops& active() {
    const Ops* ops = g_active.load(std::memory_order_acquire);
    if (!ops) {
        ops = detect();
        g_active.store(ops, std::memory_order_release);
    }
    return *ops;
}

bool set_active(std::string_view name) {
    if (name == "scalar") {
        g_active.store(&scalar_ops(), std::memory_order_release);
        return true;
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (name == "avx2" && __builtin_cpu_supports("avx2")) {
        g_active.store(&avx2_ops(), std::memory_order_release);
        return true;
    }
#endif
    return false;
}

std::vector<std::string> available() {
    std::vector<std::string> out{"scalar"};
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) out.emplace_back("avx2");
#endif
    return out;
}

}  // namespace quatop::kernels
