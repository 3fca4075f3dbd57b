#include "lelab/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace lelab::kernels {

#ifdef LELAB_BUILD_AVX2
const Ops* avx2_ops_impl();
#endif

const Ops* avx2_ops() {
#ifdef LELAB_BUILD_AVX2
#if defined(__GNUC__) || defined(__clang__)
    if (__builtin_cpu_supports("avx2")) return avx2_ops_impl();
#endif
#endif
    return nullptr;
}

namespace {

struct Selection {
    const Ops* ops;
    const char* name;
};

Selection select() {
    const char* forced = std::getenv("LELAB_SIMD");
    if (forced && std::strcmp(forced, "scalar") == 0) return {&scalar_ops(), "scalar"};
    if (forced && std::strcmp(forced, "avx2") == 0) {
        if (const Ops* v = avx2_ops()) return {v, "avx2"};
        return {&scalar_ops(), "scalar"};  // requested lane unavailable
    }
    if (const Ops* v = avx2_ops()) return {v, "avx2"};
    return {&scalar_ops(), "scalar"};
}

const Selection& selection() {
    static const Selection s = select();
    return s;
}

}  // namespace

const Ops& ops() { return *selection().ops; }
const char* active_name() { return selection().name; }

}  // namespace lelab::kernels
