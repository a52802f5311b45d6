#pragma once
#include <cstddef>

namespace hb {

// Runtime resource bounds. Defaults are desk-scale; each can be raised or
// lowered through an environment variable (read once, at first use):
//   HB_MAX_TENSOR_DIM      total tensor-space dimension dim^strands (default 4096)
//   HB_MAX_SINGULAR        singular letters one expansion may distribute over (default 20)
//   HB_MAX_IMAGE_LETTERS   total free-group letters across one signature (default 1000000)
//   HB_MAX_SEARCH_STATES   states explored per side in derivation search (default 200000)
struct Limits {
    std::size_t max_tensor_dim;
    std::size_t max_singular;
    std::size_t max_image_letters;
    std::size_t max_search_states;
};

const Limits& limits();

} // namespace hb
