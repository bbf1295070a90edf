#pragma once

#include "twistkit/manin.hpp"

namespace twistkit {

/// Twisting-system pair on E = end^r(A): the tau-side component co-commutes
/// on the right (Delta . f_i = (id (x) f_i) . Delta) and is tau . id; the
/// mu-side co-commutes on the left and is id . tau^!.
struct TwistingPair {
  std::shared_ptr<const EndR> endr;
  TwistingSystem base_twist;  // the twisting system of A that induced the pair
  TwistingSystem tau_side;
  TwistingSystem mu_side;
};

/// mu-side/tau-side systems induced by a twisting system of A.
TwistingPair pair_from_twist(std::shared_ptr<const EndR> endr,
                             const TwistingSystem& t_a);

/// (P1), (P2), derived (P3), (P4), and both squares of the coaction
/// diagrams, per degree <= d.
Report verify_pair(const TwistingPair& pair, std::size_t d);

/// The system of twisting functionals alpha_i = eps . tau_i with inverse
/// alpha_i^{-1} = eps . mu_i, evaluated through per-degree rows over the
/// standard-word basis of E.
class Functionals {
 public:
  /// Non-owning: the pair must outlive the functionals.
  explicit Functionals(const TwistingPair& pair);

  const EndR& endr() const { return *pair_->endr; }
  const TwistingPair& pair() const { return *pair_; }
  IndexWindow window() const { return pair_->tau_side.window(); }

  Scalar alpha(int i, const Element& x) const;
  Scalar alpha_inv(int i, const Element& x) const;
  /// Degree-one values alpha_i(z_j^k) as a matrix indexed by (j, k).
  Matrix degree_one(int i) const;

  /// Convolution (f*g)(x) = sum f(x_1) g(x_2) of two indexed slices.
  Scalar convolve(int fi, bool f_inverse, int gi, bool g_inverse,
                  const Element& x) const;

  /// Defining conditions: invertibility per degree, the Lemma equivalences
  /// (1)-(4), alpha_i(1) = 1, alpha_0 = eps.
  Report verify(std::size_t d) const;

 private:
  const std::vector<Scalar>& row(int i, bool inverse,
                                 std::size_t deg) const;

  const TwistingPair* pair_;
  mutable std::map<std::tuple<int, bool, std::size_t>, std::vector<Scalar>>
      rows_;
  mutable std::unique_ptr<std::mutex> mu_;
};

/// Per-degree matrix of the right (or left) winding map Xi^r[alpha_i]
/// (Xi^l[alpha_i^{-1}]) on the standard basis of E_deg.
Matrix winding_matrix(const Functionals& fn, int i, bool right, bool inverse,
                      std::size_t deg);

/// Lemma: tau_i = Xi^r[alpha_i] and mu_i = Xi^l[alpha_i^{-1}] as matrices
/// per degree <= d, plus the inverse-winding identities.
Report verify_winding(const Functionals& fn, std::size_t d);

/// Free inductive extension alpha_i(ab) = alpha_i(a)(alpha_{i+1} *
/// alpha_1^{-1})(b) from degree-one rows; checks relation annihilation and
/// agreement with the quotient-level evaluation.
Report verify_inductive_extension(const Functionals& fn, std::size_t d);

/// sigma(x, y) = eps(x) eps(tau_{|x|}(y)) = eps(x) alpha_{|x|}(y) and the
/// closed-form inverse sigma^{-1}(x, y) = eps(x) eps(mu_{|x|}(y)).
class Cocycle {
 public:
  explicit Cocycle(const TwistingPair& pair);

  const EndR& endr() const { return fn_.endr(); }
  const Functionals& functionals() const { return fn_; }

  Scalar sigma(const Element& x, const Element& y) const;
  Scalar sigma_inv(const Element& x, const Element& y) const;

  /// Unitality, the 2-cocycle axiom on standard-word triples with every
  /// argument and every needed product within the cap, and sigma *
  /// sigma^{-1} = unit form per degree pair.
  Report verify(std::size_t d) const;

 private:
  Functionals fn_;
};

/// x ._sigma y = sum sigma^{-1}(x_1,y_1) x_2 y_2 sigma(x_3,y_3) in E.
Element bialgebra_cocycle_product(const Cocycle& c, const Element& x,
                                  const Element& y);

/// a ._sigma b = sum a_0 b_0 sigma(a_1, b_1) in A.
Element comodule_cocycle_product(const Cocycle& c, const Element& a,
                                 const Element& b);

/// nu_i = tau_i . mu_i passes the twisting-system axioms and
/// x ._sigma y = x nu_{|x|}(y) on basis pairs <= d.
Report verify_composed_twist(const Cocycle& c, std::size_t d);

/// a ._sigma b = a ._tau b on all standard-word pairs with |a|+|b| <= d,
/// plus vanishing of the twisted relations under the sigma-product.  The
/// EndR object is shared so repeated runs reuse its graded components.
Report verify_main_theorem(std::shared_ptr<const EndR> endr,
                           const TwistingSystem& t, std::size_t d);

/// tau_i(x_j) = sum_k x_k alpha_i(z_j^k): recovers a twisting system of A
/// from functionals on E (explicit maps over the window).
TwistingSystem twist_from_cocycle(const Algebra& a, const Functionals& fn);

}  // namespace twistkit
