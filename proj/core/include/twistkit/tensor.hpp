#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "twistkit/matrix.hpp"
#include "twistkit/sparse_echelon.hpp"

namespace twistkit {

struct DegreeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ordered set of degree-one generators.  The declared order fixes the
/// degree-lexicographic word order for the whole session.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<std::string> names);

  std::size_t dimension() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of a generator name, or npos.
  std::size_t index_of(const std::string& name) const;

  /// Dual generator set: primal names decorated with "^", same order.
  GeneratorSet dual() const;
  /// Pair alphabet for V (x) W: names "(v,w)", row-major (v outer).
  static GeneratorSet pair_alphabet(const GeneratorSet& v,
                                    const GeneratorSet& w);

  bool operator==(const GeneratorSet&) const = default;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::string> names_;
};

/// Words of a fixed degree are indexed 0 .. n^deg - 1 in deg-lex order with
/// the last letter least significant.
class Word {
 public:
  static std::uint64_t encode(const std::vector<std::uint32_t>& letters,
                              std::size_t n);
  static std::vector<std::uint32_t> decode(std::uint64_t idx,
                                           std::size_t deg, std::size_t n);
  static std::string render(std::uint64_t idx, std::size_t deg,
                            const GeneratorSet& gens, const char* sep = "*");
};

/// n^deg, guarded: throws DegreeCapError above a fixed desk-scale limit.
std::uint64_t word_space_dim(std::size_t n, std::size_t deg);

/// Homogeneous element of V^{(x) deg}: sorted sparse word coordinates with
/// no zero coefficients stored.
class Tensor {
 public:
  Tensor(Field f, std::size_t deg) : field_(f), deg_(deg) {}
  static Tensor unit(Field f);  // degree 0, coefficient 1
  static Tensor word(Field f, std::size_t deg, std::uint64_t idx);
  static Tensor from_sparse(Field f, std::size_t deg, SparseVec coords);

  Field field() const { return field_; }
  std::size_t degree() const { return deg_; }
  const SparseVec& coords() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor scaled(const Scalar& s) const;
  /// Concatenation product (V^{(x)p}) x (V^{(x)q}) -> V^{(x)(p+q)}.
  Tensor concat(const Tensor& o, std::size_t n) const;

  bool operator==(const Tensor& o) const;

  std::string render(const GeneratorSet& gens) const;

 private:
  Field field_;
  std::size_t deg_;
  SparseVec c_;  // sorted, nonzero
};

/// Interleaving bijection V^{(x)m} (x) W^{(x)m} -> (V (x) W)^{(x)m}:
/// v_1...v_m (x) w_1...w_m  |->  (v_1,w_1)...(v_m,w_m), extended bilinearly.
Tensor shuffle(const Tensor& a, const Tensor& b, std::size_t dim_v,
               std::size_t dim_w);

/// Applies f_0 (x) ... (x) f_{n-1} slot-wise; each f_t is a degree-one
/// matrix in the row convention x_j |-> sum_l M(j,l) x_l.
Tensor apply_tensor_of_maps(const std::vector<const Matrix*>& maps,
                            const Tensor& t);

/// Full contraction <f_1 (x)...(x) f_n, a_1 (x)...(x) a_n> = prod f_i(a_i)
/// over the dual-basis coordinate pairing.
Scalar pairing(const Tensor& dual, const Tensor& primal);

/// Dense coordinate row of a tensor (small spaces only).
std::vector<Scalar> dense_coords(const Tensor& t, std::size_t n);

}  // namespace twistkit
