#include "twistkit/algebra.hpp"

#include <algorithm>

namespace twistkit {

Algebra::Algebra(Field f, GeneratorSet gens, std::size_t m, Subspace rel,
                 std::size_t cap)
    : field_(f), gens_(std::move(gens)), m_(m), relations_(std::move(rel)),
      cap_(cap) {
  if (m_ < 2) throw ScalarError("homogeneity degree must be >= 2");
  if (relations_.ambient_dim() != word_space_dim(gens_.dimension(), m_))
    throw ScalarError("relation space has wrong ambient dimension");
}

AlgebraPtr Algebra::make(Field f, GeneratorSet gens, std::size_t m,
                         const std::vector<Tensor>& relations,
                         std::size_t degree_cap) {
  const std::uint64_t ambient = word_space_dim(gens.dimension(), m);
  Matrix rows(f, relations.size(), ambient);
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (relations[i].degree() != m)
      throw ScalarError("relation of degree != m");
    for (auto& [w, s] : relations[i].coords()) rows.at(i, w) = s;
  }
  return make(f, std::move(gens), m, Subspace::span(rows), degree_cap);
}

AlgebraPtr Algebra::make(Field f, GeneratorSet gens, std::size_t m,
                         Subspace relation_space, std::size_t degree_cap) {
  return AlgebraPtr(new Algebra(f, std::move(gens), m,
                                std::move(relation_space), degree_cap));
}

std::vector<Tensor> Algebra::relation_basis() const {
  std::vector<Tensor> out;
  for (std::size_t i = 0; i < relations_.dim(); ++i) {
    SparseVec row;
    for (std::size_t j = 0; j < relations_.ambient_dim(); ++j) {
      const Scalar& s = relations_.basis().at(i, j);
      if (!s.is_zero()) row.emplace_back(j, s);
    }
    out.push_back(Tensor::from_sparse(field_, m_, std::move(row)));
  }
  return out;
}

const GradedComponent& Algebra::component(std::size_t n) const {
  if (n > cap_)
    throw DegreeCapError("degree " + std::to_string(n) +
                         " exceeds the session cap " + std::to_string(cap_));
  std::lock_guard lock(mu_);
  // build all missing lower components first; the recursion in
  // build_component reads the cache directly
  for (std::size_t k = std::min(n, m_); k <= n; ++k)
    if (!cache_.count(k)) cache_[k] = build_component(k);
  if (!cache_.count(n)) cache_[n] = build_component(n);
  return *cache_.at(n);
}

std::shared_ptr<const GradedComponent> Algebra::build_component(
    std::size_t n) const {
  const std::size_t nv = gens_.dimension();
  const std::uint64_t ambient = word_space_dim(nv, n);
  auto ech = std::make_shared<SparseEchelon>(field_, ambient);

  if (n >= m_) {
    std::vector<SparseVec> rel_rows;
    for (std::size_t i = 0; i < relations_.dim(); ++i) {
      SparseVec row;
      for (std::size_t j = 0; j < relations_.ambient_dim(); ++j) {
        const Scalar& s = relations_.basis().at(i, j);
        if (!s.is_zero()) row.emplace_back(j, s);
      }
      rel_rows.push_back(std::move(row));
    }
    if (n == m_) {
      for (auto& row : rel_rows) ech->add_trusted_rref_row(std::move(row));
    } else {
      // J_n = J_{n-1} (x) V  +  V^{(x)(n-m)} (x) R.  Appending a letter to
      // an RREF basis keeps it RREF (the letter is the least significant
      // index digit), so those rows are inserted untouched.
      const auto& prev = *cache_.at(n - 1);
      for (const auto& prow : prev.ideal->rows())
        for (std::size_t l = 0; l < nv; ++l) {
          SparseVec row;
          row.reserve(prow.size());
          for (auto& [c, s] : prow) row.emplace_back(c * nv + l, s);
          ech->add_trusted_rref_row(std::move(row));
        }
      const std::uint64_t prefixes = word_space_dim(nv, n - m_);
      const std::uint64_t rel_dim = relations_.ambient_dim();
      for (std::uint64_t w = 0; w < prefixes; ++w)
        for (auto& rrow : rel_rows) {
          SparseVec row;
          row.reserve(rrow.size());
          for (auto& [c, s] : rrow) row.emplace_back(w * rel_dim + c, s);
          ech->add_row(std::move(row));
        }
    }
  }
  ech->finalize();

  auto comp = std::make_shared<GradedComponent>();
  comp->degree = n;
  comp->ideal = ech;
  comp->standard_words.reserve(ambient - ech->rank());
  for (std::uint64_t wIdx = 0; wIdx < ambient; ++wIdx)
    if (!ech->is_pivot(wIdx)) comp->standard_words.push_back(wIdx);
  for (std::size_t i = 0; i < comp->standard_words.size(); ++i)
    comp->word_pos[comp->standard_words[i]] = i;
  return comp;
}

std::vector<std::size_t> Algebra::hilbert_dims(std::size_t d) const {
  std::vector<std::size_t> out;
  out.reserve(d + 1);
  for (std::size_t n = 0; n <= d; ++n) out.push_back(dim(n));
  return out;
}

Element Algebra::normal_form(const Tensor& t) const {
  const auto& comp = component(t.degree());
  Element e;
  e.degree = t.degree();
  e.coords = comp.ideal->reduce(t.coords());
  return e;
}

Element Algebra::multiply(const Element& a, const Element& b) const {
  // bilinear expansion over memoized word-by-word products: verification
  // loops multiply the same standard-word pairs many times over
  std::map<std::uint64_t, Scalar> acc;
  for (auto& [wa, ca] : a.coords)
    for (auto& [wb, cb] : b.coords) {
      const Element& p = word_product(a.degree, wa, b.degree, wb);
      Scalar c = ca * cb;
      for (auto& [w, s] : p.coords) acc[w] += c * s;
    }
  Element out;
  out.degree = a.degree + b.degree;
  for (auto& [w, s] : acc)
    if (!s.is_zero()) out.coords.emplace_back(w, s);
  return out;
}

const Element& Algebra::word_product(std::size_t da, std::uint64_t wa,
                                     std::size_t db, std::uint64_t wb) const {
  auto key = std::make_tuple(da, wa, db, wb);
  {
    std::lock_guard lock(mu_);
    auto it = product_cache_.find(key);
    if (it != product_cache_.end()) return it->second;
  }
  Tensor prod = Tensor::word(field_, da, wa)
                    .concat(Tensor::word(field_, db, wb), gens_.dimension());
  Element nf = normal_form(prod);
  std::lock_guard lock(mu_);
  return product_cache_.emplace(key, std::move(nf)).first->second;
}

Element Algebra::one() const {
  Element e;
  e.degree = 0;
  e.coords.emplace_back(0, Scalar::one(field_));
  return e;
}

Element Algebra::basis_element(std::size_t degree, std::size_t pos) const {
  const auto& comp = component(degree);
  Element e;
  e.degree = degree;
  e.coords.emplace_back(comp.standard_words[pos], Scalar::one(field_));
  return e;
}

Tensor Algebra::representative(const Element& e) const {
  return Tensor::from_sparse(field_, e.degree, e.coords);
}

std::string Algebra::render(const Element& e) const {
  return representative(e).render(gens_);
}

}  // namespace twistkit
