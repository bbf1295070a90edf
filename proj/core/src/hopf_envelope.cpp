#include "twistkit/hopf_envelope.hpp"

#include <sstream>

namespace twistkit {

namespace {

std::string level_name(const std::string& base, std::size_t k) {
  if (k == 0) return base;
  if (k == 1) return "S(" + base + ")";
  return "S^" + std::to_string(k) + "(" + base + ")";
}

std::uint64_t reverse_word(std::uint64_t w, std::size_t deg, std::size_t g) {
  auto letters = Word::decode(w, deg, g);
  std::uint64_t out = 0;
  for (std::size_t t = deg; t-- > 0;) out = out * g + letters[t];
  return out;
}

}  // namespace

EnvelopePresentation emit_envelope(const EndR& endr, std::size_t level_cap) {
  const Algebra& e = endr.bialgebra();
  const std::size_t nn = endr.n();
  const std::size_t g = nn * nn;
  const std::size_t m = e.homogeneity_degree();
  auto rels = e.relation_basis();

  EnvelopePresentation env;
  env.level_cap = level_cap;
  env.twisted_per_level = rels.size();
  env.antipode_per_level = 2 * g;

  std::ostringstream os;
  os << "hopf envelope presentation of the universal bialgebra\n";
  os << "base generators: " << g << ", antipode levels: 0.."
     << level_cap << "\n";

  std::vector<std::vector<std::string>> names(level_cap + 2);
  for (std::size_t k = 0; k <= level_cap + 1; ++k)
    for (std::size_t l = 0; l < g; ++l)
      names[k].push_back(level_name(e.gens().name(l), k));
  for (std::size_t k = 0; k <= level_cap; ++k) {
    env.generators.insert(env.generators.end(), names[k].begin(),
                          names[k].end());
    os << "generators level " << k << ":";
    for (auto& n : names[k]) os << " " << n;
    os << "\n";
  }

  for (std::size_t k = 0; k <= level_cap; ++k) {
    // twisted relation copies S^k(R): S is an anti-algebra map, so odd
    // levels reverse the word order
    GeneratorSet lvl(names[k]);
    for (std::size_t r = 0; r < rels.size(); ++r) {
      SparseVec coords;
      for (auto& [w, c] : rels[r].coords())
        coords.emplace_back(k % 2 ? reverse_word(w, m, g) : w, c);
      Tensor t = Tensor::from_sparse(e.field(), m, std::move(coords));
      os << "relation S^" << k << "(R)[" << r << "]: " << t.render(lvl)
         << "\n";
    }
    // antipode pairings expanded through Delta(z_j^l) = sum_i z_i^l (x) z_j^i
    // and the anti-coalgebra rule for odd levels
    for (std::size_t j = 0; j < nn; ++j)
      for (std::size_t l = 0; l < nn; ++l) {
        const std::string& gen = names[k][endr.z_letter(j, l)];
        std::string right, left;
        for (std::size_t i = 0; i < nn; ++i) {
          if (i) {
            right += " + ";
            left += " + ";
          }
          if (k % 2 == 0) {
            right += names[k][endr.z_letter(i, l)] + "*" +
                     names[k + 1][endr.z_letter(j, i)];
            left += names[k + 1][endr.z_letter(i, l)] + "*" +
                    names[k][endr.z_letter(j, i)];
          } else {
            right += names[k][endr.z_letter(j, i)] + "*" +
                     names[k + 1][endr.z_letter(i, l)];
            left += names[k + 1][endr.z_letter(j, i)] + "*" +
                    names[k][endr.z_letter(i, l)];
          }
        }
        const char* tail = (j == l) ? " - 1" : "";
        os << "relation (id(x)S)[" << k << "](" << gen << "): " << right
           << tail << "\n";
        os << "relation (S(x)id)[" << k << "](" << gen << "): " << left
           << tail << "\n";
      }
  }
  env.text = os.str();
  return env;
}

Report verify_envelope(const EnvelopePresentation& env, const EndR& endr) {
  Report rep;
  const Algebra& e = endr.bialgebra();
  const std::size_t g = endr.n() * endr.n();

  rep.add("envelope-generator-count",
          env.generators.size() == (env.level_cap + 1) * g,
          "expected " + std::to_string((env.level_cap + 1) * g));
  rep.add("envelope-twisted-family-count",
          env.twisted_per_level == e.relation_space().dim(),
          "expected dim R = " + std::to_string(e.relation_space().dim()));
  rep.add("envelope-antipode-family-count",
          env.antipode_per_level == 2 * g,
          "expected 2n^2 = " + std::to_string(2 * g));

  // eps kills every emitted relation: eps(S^k(z)) = eps(z), so the twisted
  // copies evaluate like R itself and the pairing families telescope
  bool eok = true;
  std::string ewit;
  const std::size_t m = e.homogeneity_degree();
  std::size_t ridx = 0;
  for (const Tensor& r : e.relation_basis()) {
    for (std::size_t k = 0; k <= env.level_cap && eok; ++k) {
      Scalar acc = Scalar::zero(e.field());
      for (auto& [w, c] : r.coords())
        acc += c * endr.counit_word(
                       m, k % 2 ? reverse_word(w, m, g) : w);
      if (!acc.is_zero()) {
        eok = false;
        ewit = "S^" + std::to_string(k) + "(R)[" + std::to_string(ridx) + "]";
      }
    }
    ++ridx;
  }
  for (std::size_t j = 0; j < endr.n() && eok; ++j)
    for (std::size_t l = 0; l < endr.n(); ++l) {
      // eps of the pairing relation: sum_i delta_il delta_ji - delta_jl
      Scalar acc = Scalar::zero(e.field());
      for (std::size_t i = 0; i < endr.n(); ++i)
        if (i == l && j == i) acc += Scalar::one(e.field());
      if (j == l) acc -= Scalar::one(e.field());
      if (!acc.is_zero()) {
        eok = false;
        ewit = "pairing(" + std::to_string(j + 1) + "," +
               std::to_string(l + 1) + ")";
        break;
      }
    }
  rep.add("envelope-counit-compatible", eok, ewit);
  return rep;
}

}  // namespace twistkit
