#include <cstdlib>
#include <string>
#include <vector>

#include "srblab/errors.hpp"
#include "srblab/kernels/kernels.hpp"

namespace srblab::kernels {

#if defined(__x86_64__) || defined(_M_X64)
const KernelOps& avx2_ops();
static bool avx2_supported() { return __builtin_cpu_supports("avx2"); }
#endif
#if defined(__aarch64__)
const KernelOps& neon_ops();
#endif

std::vector<std::string> available() {
    std::vector<std::string> names{"scalar"};
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_supported()) names.emplace_back("avx2");
#endif
#if defined(__aarch64__)
    names.emplace_back("neon");
#endif
    return names;
}

static const KernelOps& select() {
    if (const char* forced = std::getenv("SRBLAB_KERNEL")) {
        const std::string want(forced);
        if (want == "scalar") return scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
        if (want == "avx2") {
            if (!avx2_supported()) throw ArgumentError("SRBLAB_KERNEL=avx2 but CPU lacks AVX2");
            return avx2_ops();
        }
#endif
#if defined(__aarch64__)
        if (want == "neon") return neon_ops();
#endif
        throw ArgumentError("SRBLAB_KERNEL=" + want + " is not available on this machine");
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_supported()) return avx2_ops();
#endif
#if defined(__aarch64__)
    return neon_ops();
#else
    return scalar_ops();
#endif
}

const KernelOps& active() {
    static const KernelOps& ops = select();
    return ops;
}

}  // namespace srblab::kernels
