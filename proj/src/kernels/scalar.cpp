#include "pgrp/kernels.hpp"

namespace pgrp::kernels::scalar {

void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
              std::uint32_t c, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = (y[i] + c * x[i]) % p;
  }
}

void compose(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out,
             std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = b[a[i]];
  }
}

bool all_zero(const std::uint32_t* x, std::size_t n) {
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc |= x[i];
  }
  return acc == 0;
}

}  // namespace pgrp::kernels::scalar
