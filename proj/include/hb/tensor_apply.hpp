#pragma once
#include <cstdint>
#include <map>

#include "hb/error.hpp"

namespace hb {

// Apply a pair operator on tensor slots (pos, pos+1) of m slots to a sparse
// column vector, generically over the coefficient ring. `local` must expose
// col(pair_index) -> const std::map<int, Ring>& for pair indices hi*d + lo;
// slot 0 is the most significant digit of a basis index.
template <class LocalOp, class Ring>
std::map<int, Ring> apply_pair_slot(const std::map<int, Ring>& v, const LocalOp& local, int d,
                                    int m, int pos) {
    if (pos < 0 || pos + 1 >= m) throw ValidationError("apply_pair_slot: slot out of range");
    std::int64_t stride = 1;
    for (int i = pos + 2; i < m; ++i) stride *= d;
    const std::int64_t lo_stride = stride;
    const std::int64_t hi_stride = stride * d;

    std::map<int, Ring> out;
    for (const auto& [idx, val] : v) {
        const int hi_in = static_cast<int>((idx / hi_stride) % d);
        const int lo_in = static_cast<int>((idx / lo_stride) % d);
        const std::int64_t base = idx - hi_in * hi_stride - lo_in * lo_stride;
        for (const auto& [pair_out, w] : local.col(hi_in * d + lo_in)) {
            const std::int64_t r = base + (pair_out / d) * hi_stride + (pair_out % d) * lo_stride;
            auto it = out.find(static_cast<int>(r));
            if (it == out.end()) {
                out.emplace(static_cast<int>(r), w * val);
            } else {
                it->second = it->second + w * val;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

} // namespace hb
