#include "cpcool/kernels.hpp"
#include "cpcool/kernels/closed_form_impl.hpp"

namespace cpcool::kernels::detail {

void closed_form_batch_scalar(const ClosedFormBatchIn& in, const ClosedFormBatchOut& out,
                              std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    const auto r = closed_form<double>(in.omega[i], in.nu[i], in.g[i], in.gamma[i], in.alpha_sq[i]);
    out.m_ss[i] = r.m;
    out.n_ss[i] = r.n;
    out.gamma_eff[i] = r.gamma_eff;
    out.lambda3[i] = r.lambda3;
    out.mu3[i] = r.mu3;
  }
}

}  // namespace cpcool::kernels::detail
