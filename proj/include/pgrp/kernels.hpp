#pragma once

// Data-parallel inner loops shared by the linear algebra and permutation
// engines. Each kernel has a portable scalar reference and, where the CPU
// supports it, an AVX2 variant. The variant is chosen once at first use;
// PGRP_ISA=scalar in the environment pins the reference path.

#include <cstdint>
#include <span>
#include <string_view>

namespace pgrp::kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// Largest modulus the kernels accept; c*x + y must stay exact in a float.
inline constexpr std::uint32_t max_modulus = 4093;

/// y[i] = (y[i] + c * x[i]) mod p. Inputs are residues in [0, p).
void axpy_mod(std::span<std::uint32_t> y, std::span<const std::uint32_t> x,
              std::uint32_t c, std::uint32_t p);

/// out[i] = b[a[i]]: apply a, then b (right action composition).
void compose(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out);

/// True iff every entry is zero.
bool all_zero(std::span<const std::uint32_t> x);

Isa active_isa();
bool isa_supported(Isa isa);
/// Override the dispatch choice (tests use this to compare variants).
void set_isa(Isa isa);

namespace scalar {
void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
              std::uint32_t c, std::uint32_t p);
void compose(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out,
             std::size_t n);
bool all_zero(const std::uint32_t* x, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define PGRP_HAVE_AVX2_KERNELS 1
namespace avx2 {
void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
              std::uint32_t c, std::uint32_t p);
void compose(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out,
             std::size_t n);
bool all_zero(const std::uint32_t* x, std::size_t n);
}  // namespace avx2
#endif

}  // namespace pgrp::kernels
