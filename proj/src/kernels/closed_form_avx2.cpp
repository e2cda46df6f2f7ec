#include "cpcool/kernels.hpp"
#include "cpcool/kernels/avx2_lane.hpp"
#include "cpcool/kernels/closed_form_impl.hpp"

namespace cpcool::kernels::detail {

void closed_form_batch_avx2(const ClosedFormBatchIn& in, const ClosedFormBatchOut& out) {
  const std::size_t count = in.omega.size();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const auto r = closed_form<Avx2Lane>(
        Avx2Lane::load(&in.omega[i]), Avx2Lane::load(&in.nu[i]), Avx2Lane::load(&in.g[i]),
        Avx2Lane::load(&in.gamma[i]), Avx2Lane::load(&in.alpha_sq[i]));
    r.m.store(&out.m_ss[i]);
    r.n.store(&out.n_ss[i]);
    r.gamma_eff.store(&out.gamma_eff[i]);
    r.lambda3.store(&out.lambda3[i]);
    r.mu3.store(&out.mu3[i]);
  }
  closed_form_batch_scalar(in, out, i, count);
}

}  // namespace cpcool::kernels::detail
