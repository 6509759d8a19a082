#pragma once

#include <cstddef>

#include "ace/field.hpp"

namespace ace::stencil::detail {

// Visits every line along `axis`. For each position i on the line the
// callback gets the flat offsets of (i-1, i, i+1) clamped to the line ends,
// plus the contiguous run length of the trailing axes so the innermost loop
// stays unit-stride.
template <class F>
void for_each_line(const Geometry& g, std::size_t axis, F&& f) {
    const std::size_t n = g.extent(axis);
    const std::size_t s = g.stride(axis);
    const std::size_t outer = g.size() / (n * s);
    for (std::size_t o = 0; o < outer; ++o) {
        const std::size_t base = o * n * s;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t im = i == 0 ? 0 : i - 1;
            const std::size_t ip = i + 1 == n ? n - 1 : i + 1;
            f(base + im * s, base + i * s, base + ip * s, s);
        }
    }
}

} // namespace ace::stencil::detail
