#include "twistkit/twisting.hpp"

namespace twistkit {

TwistingSystem::TwistingSystem(Field f, GeneratorSet gens, IndexWindow w)
    : field_(f), gens_(std::move(gens)), window_(w),
      mu_(std::make_unique<std::mutex>()) {}

TwistingSystem TwistingSystem::one_parameter(const GeneratorSet& gens,
                                             Matrix phi, IndexWindow window) {
  TwistingSystem t(phi.field(), gens, window);
  if (phi.rows() != gens.dimension() || phi.cols() != gens.dimension())
    throw ScalarError("twist matrix has wrong size");
  auto inv = phi.inverse();
  if (!inv) throw ScalarError("twist matrix is not invertible");
  t.one_param_ = true;
  t.table_.emplace(1, Pair{std::move(phi), std::move(*inv)});
  t.table_.emplace(0, Pair{Matrix::identity(t.field_, gens.dimension()),
                           Matrix::identity(t.field_, gens.dimension())});
  return t;
}

TwistingSystem TwistingSystem::explicit_maps(const GeneratorSet& gens,
                                             std::map<int, Matrix> maps,
                                             IndexWindow window) {
  if (maps.empty()) throw ScalarError("explicit twist with no matrices");
  Field f = maps.begin()->second.field();
  TwistingSystem t(f, gens, window);
  for (auto& [i, m] : maps) {
    if (m.rows() != gens.dimension() || m.cols() != gens.dimension())
      throw ScalarError("twist matrix has wrong size");
    auto inv = m.inverse();
    if (!inv)
      throw ScalarError("twist matrix at index " + std::to_string(i) +
                        " is not invertible");
    t.table_.emplace(i, Pair{m, std::move(*inv)});
  }
  // tau_0 = id always
  t.table_.emplace(0, Pair{Matrix::identity(f, gens.dimension()),
                           Matrix::identity(f, gens.dimension())});
  return t;
}

TwistingSystem TwistingSystem::identity(Field f, const GeneratorSet& gens,
                                        IndexWindow window) {
  return one_parameter(gens, Matrix::identity(f, gens.dimension()), window);
}

const Matrix& TwistingSystem::parameter_matrix() const {
  if (!one_param_) throw ScalarError("not a one-parameter system");
  return table_.at(1).fwd;
}

std::vector<int> TwistingSystem::explicit_indices() const {
  std::vector<int> out;
  for (auto& [i, p] : table_) out.push_back(i);
  return out;
}

bool TwistingSystem::index_available(int i) const {
  return one_param_ || table_.count(i) > 0;
}

const Matrix& TwistingSystem::deg1(int i) const {
  std::lock_guard lock(*mu_);
  auto it = table_.find(i);
  if (it != table_.end()) return it->second.fwd;
  if (!one_param_) throw WindowError(i);
  const Pair& phi = table_.at(1);
  // materialize phi^i (phi^{-|i|} for negative i) by exact multiplication
  const Pair* nearest = &table_.at(i > 0 ? 1 : 0);
  int have = i > 0 ? 1 : 0;
  for (auto& [j, p] : table_)
    if ((i > 0 && j > have && j <= i) || (i < 0 && j < have && j >= i))
      nearest = &p, have = j;
  Matrix fwd = nearest->fwd;
  Matrix inv = nearest->inv;
  while (have < i) {
    fwd = fwd * phi.fwd;
    inv = inv * phi.inv;
    ++have;
  }
  while (have > i) {
    fwd = fwd * phi.inv;
    inv = inv * phi.fwd;
    --have;
  }
  auto [jt, ok] = table_.emplace(i, Pair{std::move(fwd), std::move(inv)});
  return jt->second.fwd;
}

const Matrix& TwistingSystem::deg1_inverse(int i) const {
  deg1(i);  // ensure materialized
  std::lock_guard lock(*mu_);
  return table_.at(i).inv;
}

Tensor TwistingSystem::apply_word(int i, std::size_t deg, std::uint64_t w,
                                  bool inverse) const {
  if (deg == 0) return Tensor::unit(field_);
  {
    std::lock_guard lock(*mu_);
    auto it = memo_.find({inverse, i, deg, w});
    if (it != memo_.end()) return it->second;
  }
  const std::size_t n = gens_.dimension();
  auto letters = Word::decode(w, deg, n);
  const std::uint32_t x = letters[0];
  std::uint64_t rest = 0;
  for (std::size_t t = 1; t < deg; ++t) rest = rest * n + letters[t];

  Tensor result(field_, deg);
  const Matrix& head = inverse ? deg1_inverse(i) : deg1(i);
  SparseVec head_row;
  for (std::size_t l = 0; l < n; ++l)
    if (!head.at(x, l).is_zero()) head_row.emplace_back(l, head.at(x, l));
  Tensor head_t = Tensor::from_sparse(field_, 1, std::move(head_row));

  if (deg == 1) {
    result = head_t;
  } else {
    Tensor tail(field_, deg - 1);
    if (!inverse) {
      // tau_i(x b) = tau_i(x) tau_{i+1}(itau_1(b))
      tail = apply(i + 1, apply_word(1, deg - 1, rest, true), false);
    } else {
      // itau_i(x b) = itau_i(x) tau_1(itau_{i+1}(b))
      tail = apply(1, apply_word(i + 1, deg - 1, rest, true), false);
    }
    result = head_t.concat(tail, n);
  }
  std::lock_guard lock(*mu_);
  memo_.emplace(std::make_tuple(inverse, i, deg, w), result);
  return result;
}

Tensor TwistingSystem::apply(int i, const Tensor& t, bool inverse) const {
  Tensor acc(field_, t.degree());
  for (auto& [w, s] : t.coords())
    acc = acc + apply_word(i, t.degree(), w, inverse).scaled(s);
  return acc;
}

Element TwistingSystem::apply(const Algebra& a, int i, const Element& e,
                              bool inverse) const {
  return a.normal_form(apply(i, a.representative(e), inverse));
}

Matrix TwistingSystem::extend_matrix(int i, std::size_t n,
                                     bool inverse) const {
  const std::uint64_t dim = word_space_dim(gens_.dimension(), n);
  Matrix m(field_, dim, dim);
  for (std::uint64_t w = 0; w < dim; ++w) {
    Tensor img = apply_word(i, n, w, inverse);
    for (auto& [c, s] : img.coords()) m.at(w, c) = s;
  }
  return m;
}

TwistingSystem TwistingSystem::inverse_system() const {
  if (one_param_)
    return one_parameter(gens_, table_.at(1).inv, window_);
  std::map<int, Matrix> maps;
  {
    std::lock_guard lock(*mu_);
    for (auto& [i, p] : table_) maps.emplace(i, p.inv);
  }
  return explicit_maps(gens_, std::move(maps), window_);
}

Report check_preserves_R(const TwistingSystem& t, const Algebra& a) {
  Report rep;
  const std::size_t m = a.homogeneity_degree();
  auto rel = a.relation_basis();
  const Subspace& r_space = a.relation_space();
  for (int i = t.window().lo; i <= t.window().hi; ++i) {
    std::string name = "preserves-R[i=" + std::to_string(i) + "]";
    try {
      Matrix rows(a.field(), rel.size(), r_space.ambient_dim());
      for (std::size_t k = 0; k < rel.size(); ++k) {
        Tensor img = t.apply(i, rel[k]);
        for (auto& [w, s] : img.coords()) rows.at(k, w) = s;
      }
      bool ok = Subspace::span(rows) == r_space;
      rep.add(name, ok, ok ? "" : "tau_" + std::to_string(i) + "(R)!=R");
    } catch (const WindowError& e) {
      rep.add_skipped(name, "missing-index=" + std::to_string(e.index));
    }
  }
  (void)m;
  return rep;
}

namespace {

std::string pair_witness(const Algebra& a, int i, const Element& x,
                         const Element& y) {
  return "(i=" + std::to_string(i) + ",a=" + a.render(x) +
         ",b=" + a.render(y) + ")";
}

}  // namespace

Report verify_axioms(const TwistingSystem& t, const Algebra& a,
                     std::size_t d) {
  Report rep;
  bool ok[4] = {true, true, true, true};
  std::string wit[4];
  bool skipped_any = false;

  for (int i = t.window().lo; i <= t.window().hi; ++i) {
    for (std::size_t j = 0; j + 1 <= d; ++j) {
      for (std::size_t k = 1; j + k <= d; ++k) {
        for (std::size_t pa = 0; pa < a.dim(j); ++pa) {
          Element x = a.basis_element(j, pa);
          for (std::size_t pb = 0; pb < a.dim(k); ++pb) {
            Element y = a.basis_element(k, pb);
            try {
              int ji = static_cast<int>(j);
              // (1) tau_i(a tau_j(b)) = tau_i(a) tau_{i+j}(b)
              {
                Element lhs =
                    t.apply(a, i, a.multiply(x, t.apply(a, ji, y)));
                Element rhs =
                    a.multiply(t.apply(a, i, x), t.apply(a, i + ji, y));
                if (!(lhs == rhs) && ok[0])
                  ok[0] = false, wit[0] = pair_witness(a, i, x, y);
              }
              // (2) tau_i(ab) = tau_i(a) tau_{i+j}(itau_j(b))
              {
                Element lhs = t.apply(a, i, a.multiply(x, y));
                Element rhs = a.multiply(
                    t.apply(a, i, x),
                    t.apply(a, i + ji, t.apply(a, ji, y, true)));
                if (!(lhs == rhs) && ok[1])
                  ok[1] = false, wit[1] = pair_witness(a, i, x, y);
              }
              // (3) itau_i(a tau_{i+j}(b)) = itau_i(a) tau_j(b)
              {
                Element lhs = t.apply(
                    a, i, a.multiply(x, t.apply(a, i + ji, y)), true);
                Element rhs =
                    a.multiply(t.apply(a, i, x, true), t.apply(a, ji, y));
                if (!(lhs == rhs) && ok[2])
                  ok[2] = false, wit[2] = pair_witness(a, i, x, y);
              }
              // (4) itau_i(ab) = itau_i(a) tau_j(itau_{i+j}(b))
              {
                Element lhs = t.apply(a, i, a.multiply(x, y), true);
                Element rhs = a.multiply(
                    t.apply(a, i, x, true),
                    t.apply(a, ji, t.apply(a, i + ji, y, true)));
                if (!(lhs == rhs) && ok[3])
                  ok[3] = false, wit[3] = pair_witness(a, i, x, y);
              }
            } catch (const WindowError&) {
              skipped_any = true;
            }
          }
        }
      }
    }
  }
  for (int ax = 0; ax < 4; ++ax)
    rep.add("axiom(" + std::to_string(ax + 1) + ")", ok[ax], wit[ax]);
  bool all_same = (ok[0] == ok[1]) && (ok[1] == ok[2]) && (ok[2] == ok[3]);
  rep.add("axioms-equivalent", all_same,
          "axioms disagree on the tested window");

  // (5) tau_i(1) = 1 and (6) tau_0 = id
  bool unit_ok = true;
  std::string unit_wit;
  for (int i = t.window().lo; i <= t.window().hi; ++i) {
    try {
      Element u = t.apply(a, i, a.one());
      if (!(u == a.one())) {
        unit_ok = false;
        unit_wit = "i=" + std::to_string(i);
        break;
      }
    } catch (const WindowError&) {
      skipped_any = true;
    }
  }
  rep.add("axiom(5)-unit", unit_ok, unit_wit);
  bool id_ok = true;
  std::string id_wit;
  for (std::size_t n = 0; n <= d && id_ok; ++n)
    for (std::size_t p = 0; p < a.dim(n); ++p) {
      Element x = a.basis_element(n, p);
      if (!(t.apply(a, 0, x) == x)) {
        id_ok = false;
        id_wit = a.render(x);
        break;
      }
    }
  rep.add("axiom(6)-tau0-identity", id_ok, id_wit);
  if (skipped_any)
    rep.add_skipped("axiom-window", "some indices outside explicit window");
  return rep;
}

ZhangTwistResult zhang_twist(const Algebra& a, const TwistingSystem& t,
                             bool check) {
  if (check) {
    Report pre = check_preserves_R(t, a);
    if (!pre.all_pass())
      throw ScalarError(
          "refusing to twist: the family does not preserve R");
  }
  const std::size_t m = a.homogeneity_degree();
  std::vector<Matrix> slot_maps;
  slot_maps.reserve(m);
  slot_maps.push_back(Matrix::identity(a.field(), a.gens().dimension()));
  for (std::size_t j = 1; j < m; ++j)
    slot_maps.push_back(t.deg1_inverse(static_cast<int>(j)));
  std::vector<const Matrix*> ptrs;
  for (auto& mm : slot_maps) ptrs.push_back(&mm);

  std::vector<Tensor> twisted;
  for (const Tensor& r : a.relation_basis())
    twisted.push_back(apply_tensor_of_maps(ptrs, r));
  return {Algebra::make(a.field(), a.gens(), m, twisted, a.degree_cap())};
}

Element twisted_product(const Algebra& a, const TwistingSystem& t,
                        const Element& x, const Element& y) {
  return a.multiply(x, t.apply(a, static_cast<int>(x.degree), y));
}

}  // namespace twistkit
