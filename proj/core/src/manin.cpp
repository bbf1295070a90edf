#include "twistkit/manin.hpp"

namespace twistkit {

namespace {

Element unit_word(std::size_t deg, std::uint64_t w, const Field& f) {
  Element e;
  e.degree = deg;
  e.coords.emplace_back(w, Scalar::one(f));
  return e;
}

void prune(PairedCoords& m) {
  for (auto it = m.begin(); it != m.end();)
    it = it->second.is_zero() ? m.erase(it) : std::next(it);
}

GeneratorSet z_generators(const GeneratorSet& primal) {
  const std::size_t n = primal.dimension();
  std::vector<std::string> names;
  names.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      names.push_back("z_" + std::to_string(j + 1) + "^" +
                      std::to_string(k + 1));
  return GeneratorSet(std::move(names));
}

}  // namespace

AlgebraPtr bullet(const Algebra& a, const Algebra& b) {
  if (a.homogeneity_degree() != b.homogeneity_degree())
    throw ScalarError("bullet product needs equal homogeneity degrees");
  if (!(a.field() == b.field()))
    throw ScalarError("bullet product needs a common field");
  std::vector<Tensor> rels;
  for (const Tensor& r : a.relation_basis())
    for (const Tensor& s : b.relation_basis())
      rels.push_back(
          shuffle(r, s, a.gens().dimension(), b.gens().dimension()));
  return Algebra::make(a.field(),
                       GeneratorSet::pair_alphabet(a.gens(), b.gens()),
                       a.homogeneity_degree(), rels,
                       std::min(a.degree_cap(), b.degree_cap()));
}

EndR::EndR(AlgebraPtr base) : base_(std::move(base)) {
  dual_ = koszul_dual(*base_);
  std::vector<Tensor> rels;
  for (const Tensor& r : base_->relation_basis())
    for (const Tensor& s : dual_->relation_basis())
      rels.push_back(shuffle(r, s, n(), n()));
  e_ = Algebra::make(base_->field(), z_generators(base_->gens()),
                     base_->homogeneity_degree(), rels, base_->degree_cap());
}

Scalar EndR::counit_word(std::size_t deg, std::uint64_t w) const {
  auto letters = Word::decode(w, deg, n() * n());
  for (auto l : letters)
    if (l / n() != l % n()) return Scalar::zero(e_->field());
  return Scalar::one(e_->field());
}

Scalar EndR::counit(const Element& e) const {
  Scalar acc = Scalar::zero(e_->field());
  for (auto& [w, c] : e.coords) acc += c * counit_word(e.degree, w);
  return acc;
}

Element EndR::reduced(std::size_t deg, std::uint64_t raw_word,
                      const Algebra& alg) const {
  return alg.normal_form(Tensor::word(alg.field(), deg, raw_word));
}

TensorSquare EndR::comultiply(const Element& e) const {
  TensorSquare out;
  out.degree = e.degree;
  const std::size_t nn = n();
  const std::size_t g = nn * nn;
  for (auto& [w, c] : e.coords) {
    const TensorSquare* dw = nullptr;
    {
      std::lock_guard lock(mu_);
      auto it = delta_memo_.find({e.degree, w});
      if (it != delta_memo_.end()) dw = &it->second;
    }
    TensorSquare fresh;
    if (!dw) {
      fresh.degree = e.degree;
      auto letters = Word::decode(w, e.degree, g);
      // Delta(z_j^k) = sum_i z_i^k (x) z_j^i, extended multiplicatively
      std::vector<std::uint32_t> iv(e.degree, 0);
      bool done = false;
      while (!done) {
        std::uint64_t lw = 0, rw = 0;
        for (std::size_t t = 0; t < e.degree; ++t) {
          const std::size_t j = letters[t] / nn, k = letters[t] % nn;
          lw = lw * g + (iv[t] * nn + k);
          rw = rw * g + (j * nn + iv[t]);
        }
        Element nl = reduced(e.degree, lw, *e_);
        Element nr = reduced(e.degree, rw, *e_);
        for (auto& [wl, cl] : nl.coords)
          for (auto& [wr, cr] : nr.coords) {
            auto [it, inserted] = fresh.coords.try_emplace(
                std::make_pair(wl, wr), cl * cr);
            if (!inserted) it->second += cl * cr;
          }
        done = true;
        for (std::size_t t = e.degree; t-- > 0;) {
          if (++iv[t] < nn) {
            done = false;
            break;
          }
          iv[t] = 0;
        }
        if (e.degree == 0) break;
      }
      prune(fresh.coords);
      std::lock_guard lock(mu_);
      dw = &delta_memo_.emplace(std::make_pair(e.degree, w), std::move(fresh))
                .first->second;
    }
    for (auto& [key, s] : dw->coords) {
      auto [it, inserted] = out.coords.try_emplace(key, c * s);
      if (!inserted) it->second += c * s;
    }
  }
  prune(out.coords);
  return out;
}

TensorSquare EndR::coact(const Element& a) const {
  TensorSquare out;
  out.degree = a.degree;
  const std::size_t nn = n();
  for (auto& [w, c] : a.coords) {
    auto letters = Word::decode(w, a.degree, nn);
    std::vector<std::uint32_t> kv(a.degree, 0);
    bool done = false;
    while (!done) {
      std::uint64_t aw = 0, ew = 0;
      for (std::size_t t = 0; t < a.degree; ++t) {
        aw = aw * nn + kv[t];
        ew = ew * (nn * nn) + (letters[t] * nn + kv[t]);
      }
      Element na = reduced(a.degree, aw, *base_);
      Element ne = reduced(a.degree, ew, *e_);
      for (auto& [wa, ca] : na.coords)
        for (auto& [we, ce] : ne.coords) {
          Scalar v = c * ca * ce;
          auto [it, inserted] =
              out.coords.try_emplace(std::make_pair(wa, we), v);
          if (!inserted) it->second += v;
        }
      done = true;
      for (std::size_t t = a.degree; t-- > 0;) {
        if (++kv[t] < nn) {
          done = false;
          break;
        }
        kv[t] = 0;
      }
      if (a.degree == 0) break;
    }
  }
  prune(out.coords);
  return out;
}

TensorSquare EndR::coact_dual(const Element& f) const {
  TensorSquare out;
  out.degree = f.degree;
  const std::size_t nn = n();
  for (auto& [w, c] : f.coords) {
    auto letters = Word::decode(w, f.degree, nn);  // k-indices
    std::vector<std::uint32_t> jv(f.degree, 0);
    bool done = false;
    while (!done) {
      std::uint64_t ew = 0, dw = 0;
      for (std::size_t t = 0; t < f.degree; ++t) {
        ew = ew * (nn * nn) + (jv[t] * nn + letters[t]);
        dw = dw * nn + jv[t];
      }
      Element ne = reduced(f.degree, ew, *e_);
      Element nd = reduced(f.degree, dw, *dual_);
      for (auto& [we, ce] : ne.coords)
        for (auto& [wd, cd] : nd.coords) {
          Scalar v = c * ce * cd;
          auto [it, inserted] =
              out.coords.try_emplace(std::make_pair(we, wd), v);
          if (!inserted) it->second += v;
        }
      done = true;
      for (std::size_t t = f.degree; t-- > 0;) {
        if (++jv[t] < nn) {
          done = false;
          break;
        }
        jv[t] = 0;
      }
      if (f.degree == 0) break;
    }
  }
  prune(out.coords);
  return out;
}

TensorSquare square_multiply(const Algebra& e, const TensorSquare& a,
                             const TensorSquare& b) {
  TensorSquare out;
  out.degree = a.degree + b.degree;
  const Field f = e.field();
  for (auto& [pa, ca] : a.coords)
    for (auto& [pb, cb] : b.coords) {
      Element l = e.multiply(unit_word(a.degree, pa.first, f),
                             unit_word(b.degree, pb.first, f));
      Element r = e.multiply(unit_word(a.degree, pa.second, f),
                             unit_word(b.degree, pb.second, f));
      Scalar c = ca * cb;
      for (auto& [wl, cl] : l.coords)
        for (auto& [wr, cr] : r.coords) {
          Scalar v = c * cl * cr;
          auto [it, inserted] =
              out.coords.try_emplace(std::make_pair(wl, wr), v);
          if (!inserted) it->second += v;
        }
    }
  for (auto it = out.coords.begin(); it != out.coords.end();)
    it = it->second.is_zero() ? out.coords.erase(it) : std::next(it);
  return out;
}

Report EndR::verify_bialgebra(std::size_t d) const {
  Report rep;
  const std::size_t m = e_->homogeneity_degree();
  const Field f = e_->field();

  // Delta and eps kill the graded ideal: the content of "E is a bialgebra".
  for (std::size_t nd = m; nd <= d; ++nd) {
    bool dok = true, eok = true;
    std::string dwit, ewit;
    std::size_t ridx = 0;
    for (const auto& row : e_->component(nd).ideal->rows()) {
      Element raw;
      raw.degree = nd;
      raw.coords = row;  // raw ideal row; comultiply reduces per term
      TensorSquare img = comultiply(raw);
      if (!img.coords.empty() && dok) {
        dok = false;
        dwit = "J_" + std::to_string(nd) + "-row-" + std::to_string(ridx);
      }
      if (!counit(raw).is_zero() && eok) {
        eok = false;
        ewit = "J_" + std::to_string(nd) + "-row-" + std::to_string(ridx);
      }
      ++ridx;
    }
    rep.add("delta-kills-ideal[n=" + std::to_string(nd) + "]", dok, dwit);
    rep.add("eps-kills-ideal[n=" + std::to_string(nd) + "]", eok, ewit);
  }

  // coassociativity and counit laws on standard words
  for (std::size_t nd = 0; nd <= d; ++nd) {
    bool cok = true, uok = true;
    std::string cwit, uwit;
    for (std::size_t p = 0; p < e_->dim(nd); ++p) {
      Element x = e_->basis_element(nd, p);
      TensorSquare dx = comultiply(x);
      std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>,
               Scalar>
          lhs, rhs;
      Element left_sum, right_sum;
      left_sum.degree = right_sum.degree = nd;
      std::map<std::uint64_t, Scalar> lacc, racc;
      for (auto& [key, c] : dx.coords) {
        TensorSquare dl = comultiply(unit_word(nd, key.first, f));
        for (auto& [k2, c2] : dl.coords) {
          auto& slot = lhs[{k2.first, k2.second, key.second}];
          slot += c * c2;
        }
        TensorSquare dr = comultiply(unit_word(nd, key.second, f));
        for (auto& [k2, c2] : dr.coords) {
          auto& slot = rhs[{key.first, k2.first, k2.second}];
          slot += c * c2;
        }
        // counit contractions
        lacc[key.second] += c * counit_word(nd, key.first);
        racc[key.first] += c * counit_word(nd, key.second);
      }
      for (auto* mp : {&lhs, &rhs})
        for (auto it = mp->begin(); it != mp->end();)
          it = it->second.is_zero() ? mp->erase(it) : std::next(it);
      if (lhs != rhs && cok) {
        cok = false;
        cwit = e_->render(x);
      }
      for (auto* mp : {&lacc, &racc})
        for (auto it = mp->begin(); it != mp->end();)
          it = it->second.is_zero() ? mp->erase(it) : std::next(it);
      std::map<std::uint64_t, Scalar> self;
      for (auto& [w, c] : x.coords) self[w] = c;
      if ((lacc != self || racc != self) && uok) {
        uok = false;
        uwit = e_->render(x);
      }
    }
    rep.add("coassoc[n=" + std::to_string(nd) + "]", cok, cwit);
    rep.add("counit-law[n=" + std::to_string(nd) + "]", uok, uwit);
  }

  // Delta and eps are algebra maps on standard-word products
  {
    bool dok = true, eok = true;
    std::string dwit, ewit;
    for (std::size_t j = 1; j < d; ++j)
      for (std::size_t k = 1; j + k <= d; ++k)
        for (std::size_t pj = 0; pj < e_->dim(j); ++pj)
          for (std::size_t pk = 0; pk < e_->dim(k); ++pk) {
            Element u = e_->basis_element(j, pj);
            Element v = e_->basis_element(k, pk);
            Element uv = e_->multiply(u, v);
            TensorSquare lhs = comultiply(uv);
            TensorSquare rhs =
                square_multiply(*e_, comultiply(u), comultiply(v));
            if (!(lhs == rhs) && dok) {
              dok = false;
              dwit = "(" + e_->render(u) + "," + e_->render(v) + ")";
            }
            if (counit(uv) != counit(u) * counit(v) && eok) {
              eok = false;
              ewit = "(" + e_->render(u) + "," + e_->render(v) + ")";
            }
          }
    rep.add("delta-multiplicative", dok, dwit);
    rep.add("eps-multiplicative", eok, ewit);
  }

  // right coaction laws on A and left coaction laws on A^!
  for (std::size_t nd = 0; nd <= d; ++nd) {
    bool cok = true, uok = true, dcok = true, duok = true;
    std::string cwit, uwit, dcwit, duwit;
    for (std::size_t p = 0; p < base_->dim(nd); ++p) {
      Element a = base_->basis_element(nd, p);
      TensorSquare ra = coact(a);
      std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>,
               Scalar>
          lhs, rhs;
      std::map<std::uint64_t, Scalar> eacc;
      for (auto& [key, c] : ra.coords) {
        TensorSquare inner = coact(unit_word(nd, key.first, f));
        for (auto& [k2, c2] : inner.coords)
          lhs[{k2.first, k2.second, key.second}] += c * c2;
        TensorSquare de = comultiply(unit_word(nd, key.second, f));
        for (auto& [k2, c2] : de.coords)
          rhs[{key.first, k2.first, k2.second}] += c * c2;
        eacc[key.first] += c * counit_word(nd, key.second);
      }
      for (auto* mp : {&lhs, &rhs})
        for (auto it = mp->begin(); it != mp->end();)
          it = it->second.is_zero() ? mp->erase(it) : std::next(it);
      if (lhs != rhs && cok) cok = false, cwit = base_->render(a);
      for (auto it = eacc.begin(); it != eacc.end();)
        it = it->second.is_zero() ? eacc.erase(it) : std::next(it);
      std::map<std::uint64_t, Scalar> self;
      for (auto& [w, c] : a.coords) self[w] = c;
      if (eacc != self && uok) uok = false, uwit = base_->render(a);
    }
    for (std::size_t p = 0; p < dual_->dim(nd); ++p) {
      Element g = dual_->basis_element(nd, p);
      TensorSquare rg = coact_dual(g);
      std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>,
               Scalar>
          lhs, rhs;
      std::map<std::uint64_t, Scalar> eacc;
      for (auto& [key, c] : rg.coords) {
        // (Delta (x) id) rho^!  vs  (id (x) rho^!) rho^!
        TensorSquare de = comultiply(unit_word(nd, key.first, f));
        for (auto& [k2, c2] : de.coords)
          lhs[{k2.first, k2.second, key.second}] += c * c2;
        TensorSquare inner = coact_dual(unit_word(nd, key.second, f));
        for (auto& [k2, c2] : inner.coords)
          rhs[{key.first, k2.first, k2.second}] += c * c2;
        eacc[key.second] += c * counit_word(nd, key.first);
      }
      for (auto* mp : {&lhs, &rhs})
        for (auto it = mp->begin(); it != mp->end();)
          it = it->second.is_zero() ? mp->erase(it) : std::next(it);
      if (lhs != rhs && dcok) dcok = false, dcwit = dual_->render(g);
      for (auto it = eacc.begin(); it != eacc.end();)
        it = it->second.is_zero() ? eacc.erase(it) : std::next(it);
      std::map<std::uint64_t, Scalar> self;
      for (auto& [w, c] : g.coords) self[w] = c;
      if (eacc != self && duok) duok = false, duwit = dual_->render(g);
    }
    rep.add("coaction-coassoc[n=" + std::to_string(nd) + "]", cok, cwit);
    rep.add("coaction-counit[n=" + std::to_string(nd) + "]", uok, uwit);
    rep.add("dual-coaction-coassoc[n=" + std::to_string(nd) + "]", dcok,
            dcwit);
    rep.add("dual-coaction-counit[n=" + std::to_string(nd) + "]", duok,
            duwit);
  }

  // rho is an algebra map (Def. of a comodule algebra)
  {
    bool ok = true;
    std::string wit;
    for (std::size_t j = 1; j < d; ++j)
      for (std::size_t k = 1; j + k <= d; ++k)
        for (std::size_t pj = 0; pj < base_->dim(j); ++pj)
          for (std::size_t pk = 0; pk < base_->dim(k); ++pk) {
            Element u = base_->basis_element(j, pj);
            Element v = base_->basis_element(k, pk);
            TensorSquare lhs = coact(base_->multiply(u, v));
            // componentwise product A (x) E
            TensorSquare ru = coact(u), rv = coact(v);
            TensorSquare rhs;
            rhs.degree = j + k;
            for (auto& [pu, cu] : ru.coords)
              for (auto& [pv, cv] : rv.coords) {
                Element l = base_->multiply(unit_word(j, pu.first, f),
                                            unit_word(k, pv.first, f));
                Element r = e_->multiply(unit_word(j, pu.second, f),
                                         unit_word(k, pv.second, f));
                Scalar c = cu * cv;
                for (auto& [wl, cl] : l.coords)
                  for (auto& [wr, cr] : r.coords) {
                    auto [it, inserted] = rhs.coords.try_emplace(
                        std::make_pair(wl, wr), c * cl * cr);
                    if (!inserted) it->second += c * cl * cr;
                  }
              }
            prune(rhs.coords);
            if (!(lhs == rhs) && ok) {
              ok = false;
              wit = "(" + base_->render(u) + "," + base_->render(v) + ")";
            }
          }
    rep.add("coaction-multiplicative", ok, wit);
  }
  return rep;
}

TwistingSystem bullet_twist(const TwistingSystem& ta,
                            const TwistingSystem& tb) {
  if (ta.window().lo != tb.window().lo || ta.window().hi != tb.window().hi)
    throw ScalarError("bullet twist needs matching index windows");
  GeneratorSet pair = GeneratorSet::pair_alphabet(ta.gens(), tb.gens());
  if (ta.one_parameter_form() && tb.one_parameter_form())
    return TwistingSystem::one_parameter(
        pair, ta.parameter_matrix().kron(tb.parameter_matrix()),
        ta.window());
  std::map<int, Matrix> maps;
  for (int i = ta.window().lo; i <= ta.window().hi; ++i)
    if (ta.index_available(i) && tb.index_available(i))
      maps.emplace(i, ta.deg1(i).kron(tb.deg1(i)));
  return TwistingSystem::explicit_maps(pair, std::move(maps), ta.window());
}

Report verify_bullet_twist_compat(const Algebra& a, const Algebra& b,
                                  const TwistingSystem& ta,
                                  const TwistingSystem& tb, std::size_t d) {
  Report rep;
  AlgebraPtr at = zhang_twist(a, ta).presentation;
  AlgebraPtr bt = zhang_twist(b, tb).presentation;

  std::vector<Tensor> rels;
  for (const Tensor& r : at->relation_basis())
    for (const Tensor& s : bt->relation_basis())
      rels.push_back(
          shuffle(r, s, a.gens().dimension(), b.gens().dimension()));
  AlgebraPtr lhs = Algebra::make(
      a.field(), GeneratorSet::pair_alphabet(a.gens(), b.gens()),
      a.homogeneity_degree(), rels, std::min(a.degree_cap(), b.degree_cap()));

  AlgebraPtr ab = bullet(a, b);
  TwistingSystem tw = bullet_twist(ta, tb);
  AlgebraPtr rhs = zhang_twist(*ab, tw).presentation;

  rep.add("bullet-twist-relations",
          lhs->relation_space() == rhs->relation_space(),
          "Sh(R^tau(x)S^omega) != (Sh(R(x)S))^{tau.omega}");

  bool hok = true;
  std::string hwit;
  for (std::size_t nd = 0; nd <= d; ++nd)
    if (lhs->dim(nd) != rhs->dim(nd)) {
      hok = false;
      hwit = "degree=" + std::to_string(nd);
      break;
    }
  rep.add("bullet-twist-hilbert", hok, hwit);
  return rep;
}

}  // namespace twistkit
