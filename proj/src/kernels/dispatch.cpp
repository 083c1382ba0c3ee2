#include "pgrp/kernels.hpp"

#include <atomic>
#include <cassert>
#include <cstdlib>
#include <string>

namespace pgrp::kernels {
namespace {

using AxpyFn = void (*)(std::uint32_t*, const std::uint32_t*, std::size_t,
                        std::uint32_t, std::uint32_t);
using ComposeFn = void (*)(const std::uint32_t*, const std::uint32_t*,
                           std::uint32_t*, std::size_t);
using ZeroFn = bool (*)(const std::uint32_t*, std::size_t);

struct Table {
  Isa isa;
  AxpyFn axpy;
  ComposeFn compose;
  ZeroFn zero;
};

constexpr Table scalar_table{Isa::scalar, scalar::axpy_mod, scalar::compose,
                             scalar::all_zero};
#ifdef PGRP_HAVE_AVX2_KERNELS
constexpr Table avx2_table{Isa::avx2, avx2::axpy_mod, avx2::compose,
                           avx2::all_zero};
#endif

const Table* table_for(Isa isa) {
#ifdef PGRP_HAVE_AVX2_KERNELS
  if (isa == Isa::avx2) return &avx2_table;
#endif
  (void)isa;
  return &scalar_table;
}

const Table* detect() {
  if (const char* env = std::getenv("PGRP_ISA"); env && std::string(env) == "scalar") {
    return &scalar_table;
  }
  return isa_supported(Isa::avx2) ? table_for(Isa::avx2) : &scalar_table;
}

std::atomic<const Table*>& current() {
  static std::atomic<const Table*> table{detect()};
  return table;
}

}  // namespace

std::string_view to_string(Isa isa) {
  return isa == Isa::avx2 ? "avx2" : "scalar";
}

bool isa_supported(Isa isa) {
  if (isa == Isa::scalar) return true;
#ifdef PGRP_HAVE_AVX2_KERNELS
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed)->isa; }

void set_isa(Isa isa) {
  const Table* t = isa_supported(isa) ? table_for(isa) : &scalar_table;
  current().store(t, std::memory_order_relaxed);
}

void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x,
              std::uint32_t c, std::uint32_t p) {
  assert(x.size() == y.size() && p <= max_modulus);
  if (c == 0) return;
  current().load(std::memory_order_relaxed)->axpy(y.data(), x.data(), y.size(), c, p);
}

void compose(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out) {
  assert(a.size() == b.size() && out.size() == a.size());
  current().load(std::memory_order_relaxed)->compose(a.data(), b.data(), out.data(),
                                                     a.size());
}

bool all_zero(std::span<const std::uint32_t> x) {
  return current().load(std::memory_order_relaxed)->zero(x.data(), x.size());
}

}  // namespace pgrp::kernels
