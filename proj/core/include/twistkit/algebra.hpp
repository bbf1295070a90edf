#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "twistkit/subspace.hpp"
#include "twistkit/tensor.hpp"

namespace twistkit {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Degree-n slice of an m-homogeneous quotient: the ideal component
/// J_n = sum_i V^i (x) R (x) V^(n-m-i) in echelon form, plus the standard
/// (non-pivot) words that descend to a basis of A_n.
struct GradedComponent {
  std::size_t degree;
  std::shared_ptr<const SparseEchelon> ideal;   // RREF of J_n
  std::vector<std::uint64_t> standard_words;    // ascending deg-lex
  std::map<std::uint64_t, std::size_t> word_pos;  // word -> basis position

  std::size_t dim() const { return standard_words.size(); }
};

/// Element of A_n: sparse coordinates over the standard words of degree n
/// (already reduced, no J_n component).
struct Element {
  std::size_t degree = 0;
  SparseVec coords;  // keys are raw word indices, support in standard words

  bool is_zero() const { return coords.empty(); }
  bool operator==(const Element&) const = default;
};

/// Presentation A = k<V>/(R) of an m-homogeneous algebra.  Immutable after
/// construction; graded components are memoized per degree behind a lock so
/// independent degrees can be queried concurrently.
class Algebra {
 public:
  /// `relations`: spanning tensors of R in V^{(x)m} (may be redundant).
  static AlgebraPtr make(Field f, GeneratorSet gens, std::size_t m,
                         const std::vector<Tensor>& relations,
                         std::size_t degree_cap = 12);
  /// From an already-canonical relation subspace.
  static AlgebraPtr make(Field f, GeneratorSet gens, std::size_t m,
                         Subspace relation_space, std::size_t degree_cap = 12);

  Field field() const { return field_; }
  const GeneratorSet& gens() const { return gens_; }
  std::size_t homogeneity_degree() const { return m_; }
  const Subspace& relation_space() const { return relations_; }
  std::vector<Tensor> relation_basis() const;
  std::size_t degree_cap() const { return cap_; }

  /// J_n as a finalized echelon basis (cached); J_n = 0 for n < m.
  const GradedComponent& component(std::size_t n) const;

  std::size_t dim(std::size_t n) const { return component(n).dim(); }
  std::vector<std::size_t> hilbert_dims(std::size_t d) const;

  /// Image of a free tensor in A_n, over the standard-word basis.
  Element normal_form(const Tensor& t) const;
  Element multiply(const Element& a, const Element& b) const;
  Element one() const;
  Element basis_element(std::size_t degree, std::size_t pos) const;
  Tensor representative(const Element& e) const;

  std::string render(const Element& e) const;

 private:
  Algebra(Field f, GeneratorSet gens, std::size_t m, Subspace rel,
          std::size_t cap);

  Field field_;
  GeneratorSet gens_;
  std::size_t m_;
  Subspace relations_;
  std::size_t cap_;

  mutable std::mutex mu_;
  mutable std::map<std::size_t, std::shared_ptr<const GradedComponent>> cache_;
  mutable std::map<
      std::tuple<std::size_t, std::uint64_t, std::size_t, std::uint64_t>,
      Element>
      product_cache_;

  std::shared_ptr<const GradedComponent> build_component(std::size_t n) const;

  const Element& word_product(std::size_t da, std::uint64_t wa,
                              std::size_t db, std::uint64_t wb) const;
};

}  // namespace twistkit
