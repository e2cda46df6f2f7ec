#include <cstdlib>
#include <stdexcept>
#include <string>

#include "cpcool/kernels.hpp"

namespace cpcool::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

void check_sizes(const ClosedFormBatchIn& in, const ClosedFormBatchOut& out) {
  const std::size_t n = in.omega.size();
  const bool ok = in.nu.size() == n && in.g.size() == n && in.gamma.size() == n &&
                  in.alpha_sq.size() == n && out.m_ss.size() == n && out.n_ss.size() == n &&
                  out.gamma_eff.size() == n && out.lambda3.size() == n && out.mu3.size() == n;
  if (!ok) throw std::invalid_argument("closed_form_batch: span length mismatch");
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#ifdef CPCOOL_HAVE_AVX2
      return cpu_has_avx2();
#else
      return false;
#endif
  }
  return false;
}

Backend active_backend() {
  static const Backend chosen = [] {
    if (const char* env = std::getenv("CPCOOL_KERNEL"); env && std::string(env) == "scalar") {
      return Backend::Scalar;
    }
    return backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
  }();
  return chosen;
}

void closed_form_batch(Backend backend, const ClosedFormBatchIn& in, const ClosedFormBatchOut& out) {
  check_sizes(in, out);
  if (!backend_available(backend)) {
    throw std::runtime_error("kernel backend not available: " + std::string(backend_name(backend)));
  }
  switch (backend) {
    case Backend::Scalar:
      detail::closed_form_batch_scalar(in, out, 0, in.omega.size());
      return;
    case Backend::Avx2:
#ifdef CPCOOL_HAVE_AVX2
      detail::closed_form_batch_avx2(in, out);
      return;
#else
      break;
#endif
  }
  detail::closed_form_batch_scalar(in, out, 0, in.omega.size());
}

void closed_form_batch(const ClosedFormBatchIn& in, const ClosedFormBatchOut& out) {
  closed_form_batch(active_backend(), in, out);
}

}  // namespace cpcool::kernels
