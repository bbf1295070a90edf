#include "twistkit/koszul.hpp"

namespace twistkit {

AlgebraPtr koszul_dual(const Algebra& a) {
  Subspace perp = a.relation_space().annihilator();
  return Algebra::make(a.field(), a.gens().dual(), a.homogeneity_degree(),
                       std::move(perp), a.degree_cap());
}

TwistingSystem dual_twisting_system(const TwistingSystem& t) {
  GeneratorSet dual_gens = t.gens().dual();
  if (t.one_parameter_form()) {
    // (phi^i)^{-T} = (phi^{-T})^i, so the dual family stays one-parameter
    auto inv = t.parameter_matrix().inverse();
    return TwistingSystem::one_parameter(dual_gens, inv->transpose(),
                                         t.window());
  }
  std::map<int, Matrix> maps;
  for (int i : t.explicit_indices())
    maps.emplace(i, t.deg1_inverse(i).transpose());
  return TwistingSystem::explicit_maps(dual_gens, std::move(maps),
                                       t.window());
}

Report verify_dual_pairing(const TwistingSystem& t,
                           const TwistingSystem& dual, std::size_t d) {
  Report rep;
  const Field f = t.field();
  const std::size_t nv = t.gens().dimension();
  for (int i = t.window().lo; i <= t.window().hi; ++i) {
    std::string name = "dual-pairing[i=" + std::to_string(i) + "]";
    bool ok = true;
    std::string wit;
    try {
      for (std::size_t deg = 1; deg <= d && ok; ++deg) {
        const std::uint64_t dim = word_space_dim(nv, deg);
        for (std::uint64_t fw = 0; fw < dim && ok; ++fw) {
          Tensor dual_img =
              dual.apply(i, Tensor::word(f, deg, fw), false);
          for (std::uint64_t aw = 0; aw < dim; ++aw) {
            Tensor primal_pre =
                t.apply(i, Tensor::word(f, deg, aw), true);
            Scalar lhs = pairing(dual_img, Tensor::word(f, deg, aw));
            Scalar rhs = pairing(Tensor::word(f, deg, fw), primal_pre);
            if (lhs != rhs) {
              ok = false;
              wit = "(deg=" + std::to_string(deg) +
                    ",f=" + Word::render(fw, deg, dual.gens()) +
                    ",a=" + Word::render(aw, deg, t.gens()) + ")";
              break;
            }
          }
        }
      }
      rep.add(name, ok, wit);
    } catch (const WindowError& e) {
      rep.add_skipped(name, "missing-index=" + std::to_string(e.index));
    }
  }
  return rep;
}

Report verify_dual_twist_compat(const Algebra& a, const TwistingSystem& t) {
  Report rep;
  AlgebraPtr dual = koszul_dual(a);
  TwistingSystem td = dual_twisting_system(t);

  Report pre = check_preserves_R(td, *dual);
  rep.add("dual-preserves-Rperp", pre.all_pass());

  Subspace lhs = zhang_twist(*dual, td).presentation->relation_space();
  Subspace rhs =
      zhang_twist(a, t).presentation->relation_space().annihilator();
  rep.add("twist-dual-commute", lhs == rhs,
          "(Rperp)^{tau^!} != (R^tau)^perp");
  return rep;
}

}  // namespace twistkit
