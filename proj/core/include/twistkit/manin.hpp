#pragma once

#include "twistkit/koszul.hpp"

namespace twistkit {

/// A . B = k<A_1 (x) B_1> / (Sh(R(A) (x) R(B))) on the pair alphabet.
/// Throws when the homogeneity degrees differ.
AlgebraPtr bullet(const Algebra& a, const Algebra& b);

/// Sparse element of X_n (x) Y_n over standard-word pairs of two quotients.
/// Keys are raw word indices whose support lies in the standard words.
using PairedCoords = std::map<std::pair<std::uint64_t, std::uint64_t>, Scalar>;

struct TensorSquare {
  std::size_t degree = 0;
  PairedCoords coords;

  bool operator==(const TensorSquare&) const = default;
};

/// The universal bialgebra end^r(A) = A . A^! with its matrix coalgebra
/// Delta(z_j^k) = sum_i z_i^k (x) z_j^i, eps(z_j^k) = delta_{jk}, the right
/// coaction rho(x_j) = sum_k x_k (x) z_j^k on A, and the left coaction
/// rho^!(x^k) = sum_j z_j^k (x) x^j on A^!.  Generator z_j^k = x_j (x) x^k
/// sits at letter index j*n + k (primal index major).
class EndR {
 public:
  explicit EndR(AlgebraPtr base);

  const Algebra& base() const { return *base_; }
  const Algebra& dual() const { return *dual_; }
  const Algebra& bialgebra() const { return *e_; }
  AlgebraPtr bialgebra_ptr() const { return e_; }
  std::size_t n() const { return base_->gens().dimension(); }

  std::uint64_t z_letter(std::size_t j, std::size_t k) const {
    return j * n() + k;
  }

  /// eps on a raw word of E (product of Kronecker deltas); well defined on
  /// the quotient because eps annihilates the relation ideal.
  Scalar counit_word(std::size_t deg, std::uint64_t w) const;
  Scalar counit(const Element& e) const;

  /// Delta on an element of E_n, both tensor factors reduced to standard
  /// form.  Cached per standard word.
  TensorSquare comultiply(const Element& e) const;

  /// rho(a) in A_n (x) E_n over standard-word pairs.
  TensorSquare coact(const Element& a) const;
  /// rho^!(f) in E_n (x) (A^!)_n over standard-word pairs.
  TensorSquare coact_dual(const Element& f) const;

  /// Bialgebra laws per degree <= d: Delta/eps annihilate the ideal,
  /// coassociativity, counit laws, multiplicativity, and both coaction
  /// axioms.
  Report verify_bialgebra(std::size_t d) const;

 private:
  Element reduced(std::size_t deg, std::uint64_t raw_word,
                  const Algebra& alg) const;

  AlgebraPtr base_;
  AlgebraPtr dual_;
  AlgebraPtr e_;

  mutable std::mutex mu_;
  mutable std::map<std::pair<std::size_t, std::uint64_t>, TensorSquare>
      delta_memo_;
};

/// Product in E_n (x) E_m -> E_{n+m} (x) E_{n+m}, componentwise with
/// reduction (used for the multiplicativity checks of Delta).
TensorSquare square_multiply(const Algebra& e, const TensorSquare& a,
                             const TensorSquare& b);

/// Degree-one data (tau (x) omega)_i = tau_i (x) omega_i on the pair
/// alphabet (Kronecker product); one-parameter when both factors are.
TwistingSystem bullet_twist(const TwistingSystem& ta,
                            const TwistingSystem& tb);

/// Sh(R^tau (x) S^omega) = (Sh(R (x) S))^{tau . omega}, bit-exact on
/// canonical bases, plus Hilbert-dimension agreement of both quotients to
/// degree d.
Report verify_bullet_twist_compat(const Algebra& a, const Algebra& b,
                                  const TwistingSystem& ta,
                                  const TwistingSystem& tb, std::size_t d);

}  // namespace twistkit
