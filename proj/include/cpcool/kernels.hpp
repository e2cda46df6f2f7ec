#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace cpcool::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend b);

/// True when the backend was compiled in and the CPU supports it.
bool backend_available(Backend b);

/// Widest available backend, unless CPCOOL_KERNEL=scalar is set in the environment.
Backend active_backend();

/// Structure-of-arrays input for the batched closed-form evaluation.
struct ClosedFormBatchIn {
  std::span<const double> omega;
  std::span<const double> nu;
  std::span<const double> g;
  std::span<const double> gamma;
  std::span<const double> alpha_sq;
};

struct ClosedFormBatchOut {
  std::span<double> m_ss;
  std::span<double> n_ss;
  std::span<double> gamma_eff;
  std::span<double> lambda3;
  std::span<double> mu3;
};

/// Evaluates m_ss, n_ss (fluctuation part), gamma_eff, lambda^3, mu^3 element-wise.
/// All spans must have the same length.
void closed_form_batch(const ClosedFormBatchIn& in, const ClosedFormBatchOut& out);
void closed_form_batch(Backend backend, const ClosedFormBatchIn& in, const ClosedFormBatchOut& out);

namespace detail {
void closed_form_batch_scalar(const ClosedFormBatchIn& in, const ClosedFormBatchOut& out,
                              std::size_t begin, std::size_t end);
void closed_form_batch_avx2(const ClosedFormBatchIn& in, const ClosedFormBatchOut& out);
}  // namespace detail

}  // namespace cpcool::kernels
