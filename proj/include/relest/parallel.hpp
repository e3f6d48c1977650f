#pragma once

#include <cstddef>

namespace relest {

// Execution policy for the data-parallel kernels. Every parallel kernel has a
// serial twin with identical arithmetic order, so results are bitwise equal
// across policies and thread counts: each index writes only its own outputs,
// and reductions are combined in index order.
enum class Exec { serial, parallel };

namespace detail {
void parallel_for_impl(std::size_t n, void* ctx, void (*body)(void*, std::size_t));
}

template <class F>
void for_each_index(std::size_t n, Exec exec, F&& body) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  detail::parallel_for_impl(n, &body, [](void* ctx, std::size_t i) {
    (*static_cast<F*>(ctx))(i);
  });
}

}  // namespace relest
