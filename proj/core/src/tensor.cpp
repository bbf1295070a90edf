#include "twistkit/tensor.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace twistkit {

namespace {
// ambient dimensions beyond this are refused loudly rather than silently
// grinding; desk-scale degrees never get close
constexpr std::uint64_t kAmbientLimit = 1ull << 24;
}  // namespace

GeneratorSet::GeneratorSet(std::vector<std::string> names)
    : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw ScalarError("duplicate generator name '" + names_[i] + "'");
}

std::size_t GeneratorSet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return npos;
}

GeneratorSet GeneratorSet::dual() const {
  std::vector<std::string> d;
  d.reserve(names_.size());
  for (const auto& n : names_) d.push_back(n + "^");
  return GeneratorSet(std::move(d));
}

GeneratorSet GeneratorSet::pair_alphabet(const GeneratorSet& v,
                                         const GeneratorSet& w) {
  std::vector<std::string> p;
  p.reserve(v.dimension() * w.dimension());
  for (const auto& a : v.names())
    for (const auto& b : w.names()) p.push_back("(" + a + "," + b + ")");
  return GeneratorSet(std::move(p));
}

std::uint64_t Word::encode(const std::vector<std::uint32_t>& letters,
                           std::size_t n) {
  std::uint64_t idx = 0;
  for (auto l : letters) idx = idx * n + l;
  return idx;
}

std::vector<std::uint32_t> Word::decode(std::uint64_t idx, std::size_t deg,
                                        std::size_t n) {
  std::vector<std::uint32_t> letters(deg);
  for (std::size_t t = deg; t-- > 0;) {
    letters[t] = static_cast<std::uint32_t>(idx % n);
    idx /= n;
  }
  return letters;
}

std::string Word::render(std::uint64_t idx, std::size_t deg,
                         const GeneratorSet& gens, const char* sep) {
  if (deg == 0) return "1";
  auto letters = decode(idx, deg, gens.dimension());
  std::string s;
  for (std::size_t t = 0; t < deg; ++t) {
    if (t) s += sep;
    s += gens.name(letters[t]);
  }
  return s;
}

std::uint64_t word_space_dim(std::size_t n, std::size_t deg) {
  std::uint64_t d = 1;
  for (std::size_t t = 0; t < deg; ++t) {
    d *= n;
    if (d > kAmbientLimit)
      throw DegreeCapError("tensor space dimension " + std::to_string(n) +
                           "^" + std::to_string(deg) +
                           " exceeds the supported desk scale");
  }
  return d;
}

Tensor Tensor::unit(Field f) {
  Tensor t(f, 0);
  t.c_.emplace_back(0, Scalar::one(f));
  return t;
}

Tensor Tensor::word(Field f, std::size_t deg, std::uint64_t idx) {
  Tensor t(f, deg);
  t.c_.emplace_back(idx, Scalar::one(f));
  return t;
}

Tensor Tensor::from_sparse(Field f, std::size_t deg, SparseVec coords) {
  std::map<std::uint64_t, Scalar> acc;
  for (auto& [w, s] : coords) {
    auto [it, fresh] = acc.emplace(w, s);
    if (!fresh) it->second += s;
  }
  Tensor t(f, deg);
  for (auto& [w, s] : acc)
    if (!s.is_zero()) t.c_.emplace_back(w, s);
  return t;
}

Tensor Tensor::operator+(const Tensor& o) const {
  if (deg_ != o.deg_) throw ScalarError("tensor degree mismatch");
  SparseVec merged = c_;
  merged.insert(merged.end(), o.c_.begin(), o.c_.end());
  return from_sparse(field_, deg_, std::move(merged));
}

Tensor Tensor::operator-(const Tensor& o) const {
  return *this + o.scaled(-Scalar::one(field_));
}

Tensor Tensor::scaled(const Scalar& s) const {
  Tensor t(field_, deg_);
  if (s.is_zero()) return t;
  t.c_.reserve(c_.size());
  for (auto& [w, c] : c_) t.c_.emplace_back(w, c * s);
  return t;
}

Tensor Tensor::concat(const Tensor& o, std::size_t n) const {
  word_space_dim(n, deg_ + o.deg_);
  std::uint64_t shift = 1;
  for (std::size_t t = 0; t < o.deg_; ++t) shift *= n;
  SparseVec out;
  out.reserve(c_.size() * o.c_.size());
  for (auto& [w1, s1] : c_)
    for (auto& [w2, s2] : o.c_)
      out.emplace_back(w1 * shift + w2, s1 * s2);
  return from_sparse(field_, deg_ + o.deg_, std::move(out));
}

bool Tensor::operator==(const Tensor& o) const {
  return deg_ == o.deg_ && c_ == o.c_;
}

std::string Tensor::render(const GeneratorSet& gens) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [w, s] : c_) {
    std::string coeff = s.to_string();
    bool neg = coeff.size() && coeff[0] == '-';
    if (first) {
      if (neg) os << "-", coeff = coeff.substr(1);
    } else {
      os << (neg ? " - " : " + ");
      if (neg) coeff = coeff.substr(1);
    }
    first = false;
    if (coeff != "1" || deg_ == 0) {
      os << coeff;
      if (deg_ > 0) os << "*";
    }
    if (deg_ > 0) os << Word::render(w, deg_, gens);
  }
  return os.str();
}

Tensor shuffle(const Tensor& a, const Tensor& b, std::size_t dim_v,
               std::size_t dim_w) {
  if (a.degree() != b.degree())
    throw ScalarError("shuffle degree mismatch");
  const std::size_t m = a.degree();
  word_space_dim(dim_v * dim_w, m);
  SparseVec out;
  out.reserve(a.coords().size() * b.coords().size());
  for (auto& [wa, sa] : a.coords())
    for (auto& [wb, sb] : b.coords()) {
      auto la = Word::decode(wa, m, dim_v);
      auto lb = Word::decode(wb, m, dim_w);
      std::vector<std::uint32_t> lw(m);
      for (std::size_t t = 0; t < m; ++t)
        lw[t] = la[t] * static_cast<std::uint32_t>(dim_w) + lb[t];
      out.emplace_back(Word::encode(lw, dim_v * dim_w), sa * sb);
    }
  return Tensor::from_sparse(a.field(), m, std::move(out));
}

Tensor apply_tensor_of_maps(const std::vector<const Matrix*>& maps,
                            const Tensor& t) {
  if (maps.size() != t.degree())
    throw ScalarError("apply_tensor_of_maps arity mismatch");
  if (t.degree() == 0) return t;
  const std::size_t n = maps[0]->rows();
  SparseVec out;
  for (auto& [w, s] : t.coords()) {
    auto letters = Word::decode(w, t.degree(), n);
    Tensor img = Tensor::unit(t.field());
    for (std::size_t slot = 0; slot < letters.size(); ++slot) {
      const Matrix& f = *maps[slot];
      SparseVec row;
      for (std::size_t l = 0; l < f.cols(); ++l) {
        const Scalar& c = f.at(letters[slot], l);
        if (!c.is_zero()) row.emplace_back(l, c);
      }
      img = img.concat(Tensor::from_sparse(t.field(), 1, std::move(row)), n);
    }
    for (auto& [wi, si] : img.coords()) out.emplace_back(wi, si * s);
  }
  return Tensor::from_sparse(t.field(), t.degree(), std::move(out));
}

Scalar pairing(const Tensor& dual, const Tensor& primal) {
  if (dual.degree() != primal.degree())
    throw ScalarError("pairing degree mismatch");
  Scalar acc = Scalar::zero(dual.field());
  auto it = dual.coords().begin();
  auto jt = primal.coords().begin();
  while (it != dual.coords().end() && jt != primal.coords().end()) {
    if (it->first < jt->first) ++it;
    else if (jt->first < it->first) ++jt;
    else {
      acc += it->second * jt->second;
      ++it;
      ++jt;
    }
  }
  return acc;
}

std::vector<Scalar> dense_coords(const Tensor& t, std::size_t n) {
  std::uint64_t dim = word_space_dim(n, t.degree());
  std::vector<Scalar> v(dim, Scalar::zero(t.field()));
  for (auto& [w, s] : t.coords()) v[w] = s;
  return v;
}

}  // namespace twistkit
