#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "twistkit/algebra.hpp"
#include "twistkit/report.hpp"

namespace twistkit {

struct WindowError : std::runtime_error {
  int index;
  explicit WindowError(int i)
      : std::runtime_error("twisting index " + std::to_string(i) +
                           " is outside the defined window"),
        index(i) {}
};

struct IndexWindow {
  int lo = 0;
  int hi = 0;

  bool operator==(const IndexWindow&) const = default;
};

/// A twisting system determined by degree-one data: one invertible matrix
/// per index, extended to higher tensor degrees by the inductive rules
///   tau_i(a b) = tau_i(a) tau_{i+1}(itau_1(b)),
///   itau_i(a b) = itau_i(a) tau_1(itau_{i+1}(b)),
/// for a of degree one (itau denotes the inverse family).  One-parameter
/// systems tau_i = phi^i materialize their indices on demand; explicit
/// systems throw WindowError outside their table.
class TwistingSystem {
 public:
  static TwistingSystem one_parameter(const GeneratorSet& gens, Matrix phi,
                                      IndexWindow window);
  static TwistingSystem explicit_maps(const GeneratorSet& gens,
                                      std::map<int, Matrix> maps,
                                      IndexWindow window);
  static TwistingSystem identity(Field f, const GeneratorSet& gens,
                                 IndexWindow window);

  Field field() const { return field_; }
  const GeneratorSet& gens() const { return gens_; }
  const IndexWindow& window() const { return window_; }
  bool one_parameter_form() const { return one_param_; }
  const Matrix& parameter_matrix() const;
  std::vector<int> explicit_indices() const;

  const Matrix& deg1(int i) const;
  const Matrix& deg1_inverse(int i) const;
  bool index_available(int i) const;

  /// Free extension of tau_i (or its inverse) on a homogeneous tensor.
  Tensor apply(int i, const Tensor& t, bool inverse = false) const;
  /// Induced action on A_n: apply on a representative, then reduce.
  /// Only meaningful when the system preserves R.
  Element apply(const Algebra& a, int i, const Element& e,
                bool inverse = false) const;
  /// Dense matrix of the degree-n extension (small spaces).
  Matrix extend_matrix(int i, std::size_t n, bool inverse = false) const;

  TwistingSystem inverse_system() const;

 private:
  TwistingSystem(Field f, GeneratorSet gens, IndexWindow w);

  Tensor apply_word(int i, std::size_t deg, std::uint64_t w,
                    bool inverse) const;

  Field field_;
  GeneratorSet gens_;
  IndexWindow window_;
  bool one_param_ = false;

  struct Pair {
    Matrix fwd;
    Matrix inv;
  };
  // one-parameter: powers of phi cached by index; explicit: fixed table
  mutable std::map<int, Pair> table_;
  mutable std::map<std::tuple<bool, int, std::size_t, std::uint64_t>, Tensor>
      memo_;
  mutable std::unique_ptr<std::mutex> mu_;  // pointer keeps the type movable
};

struct ZhangTwistResult {
  AlgebraPtr presentation;  // same generators, relation space R^tau
};

/// tau_i(R) = R for every index in the window; failures and unreachable
/// indices become report entries.
Report check_preserves_R(const TwistingSystem& t, const Algebra& a);

/// The four equivalent twisting-system axioms plus tau_i(1)=1 and
/// tau_0 = id, exhaustively on standard-word bases up to total degree d.
Report verify_axioms(const TwistingSystem& t, const Algebra& a,
                     std::size_t d);

/// R^tau = (id (x) itau_1 (x) ... (x) itau_{m-1})(R).  Refuses to twist by
/// a family that does not preserve R.
ZhangTwistResult zhang_twist(const Algebra& a, const TwistingSystem& t,
                             bool check = true);

/// a ._tau b = a tau_{|a|}(b), computed inside A.
Element twisted_product(const Algebra& a, const TwistingSystem& t,
                        const Element& x, const Element& y);

}  // namespace twistkit
