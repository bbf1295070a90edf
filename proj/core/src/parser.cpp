#include "twistkit/parser.hpp"

#include <cctype>
#include <sstream>

namespace twistkit {

namespace {

struct Tok {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Tok> split_line(const std::string& line) {
  std::vector<Tok> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

long parse_long(const Tok& t, std::size_t line) {
  try {
    std::size_t used = 0;
    long v = std::stol(t.text, &used);
    if (used != t.text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, t.column, "expected an integer, got '" + t.text +
                                         "'");
  }
}

std::uint64_t parse_u64(const Tok& t, std::size_t line) {
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(t.text, &used);
    if (used != t.text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, t.column,
                     "expected an unsigned integer, got '" + t.text + "'");
  }
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Scalar parse_scalar(const Field& f, const std::string& text,
                    std::size_t line, std::size_t column) {
  try {
    return Scalar::parse(f, text);
  } catch (const std::exception&) {
    throw ParseError(line, column, "malformed scalar '" + text + "'");
  }
}

/// `[[a,b],[c,d]]` after whitespace removal.
Matrix parse_matrix(const Field& f, const std::string& raw, std::size_t line,
                    std::size_t column) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(line, column, "matrix: " + msg);
  };
  auto expect = [&](char c) {
    if (i >= s.size() || s[i] != c)
      throw fail(std::string("expected '") + c + "'");
    ++i;
  };
  expect('[');
  std::vector<std::vector<Scalar>> rows;
  while (true) {
    expect('[');
    std::vector<Scalar> row;
    while (true) {
      std::size_t start = i;
      while (i < s.size() && s[i] != ',' && s[i] != ']') ++i;
      row.push_back(
          parse_scalar(f, s.substr(start, i - start), line, column));
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    expect(']');
    if (!rows.empty() && row.size() != rows.front().size())
      throw fail("ragged rows");
    rows.push_back(std::move(row));
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  expect(']');
  if (i != s.size()) throw fail("trailing text");
  Matrix m(f, rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      m.at(r, c) = rows[r][c];
  return m;
}

bool looks_numeric(const std::string& t) {
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  return i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]));
}

/// expr := ["-"] term (("+"|"-") term)*; term := [scalar "*"] word;
/// word := gen ("*" gen)^{m-1}.
Tensor parse_relation(const Field& f, const GeneratorSet& gens, std::size_t m,
                      const std::string& raw, std::size_t line,
                      std::size_t column) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError(line, column, "empty relation");

  SparseVec coords;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    Scalar sign = Scalar::one(f);
    if (s[i] == '+' || s[i] == '-') {
      if (first && s[i] == '+')
        throw ParseError(line, column, "unexpected leading '+'");
      if (s[i] == '-') sign = -sign;
      ++i;
    } else if (!first) {
      throw ParseError(line, column, "expected '+' or '-' between terms");
    }
    first = false;
    // split the term at '*' into factors
    std::vector<std::string> factors;
    std::size_t start = i;
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      if (s[i] == '*') {
        factors.push_back(s.substr(start, i - start));
        start = i + 1;
      }
      ++i;
    }
    factors.push_back(s.substr(start, i - start));
    for (auto& fac : factors)
      if (fac.empty())
        throw ParseError(line, column, "empty factor in relation term");

    Scalar coeff = sign;
    std::size_t w0 = 0;
    if (looks_numeric(factors[0])) {
      coeff = sign * parse_scalar(f, factors[0], line, column);
      w0 = 1;
    }
    std::size_t len = factors.size() - w0;
    if (len != m)
      throw ParseError(line, column,
                       "word length " + std::to_string(len) +
                           " != deg " + std::to_string(m));
    std::vector<std::uint32_t> letters;
    for (std::size_t t = w0; t < factors.size(); ++t) {
      std::size_t g = gens.index_of(factors[t]);
      if (g == GeneratorSet::npos)
        throw ParseError(line, column,
                         "unknown generator '" + factors[t] + "'");
      letters.push_back(static_cast<std::uint32_t>(g));
    }
    coords.emplace_back(Word::encode(letters, gens.dimension()), coeff);
  }
  Tensor t = Tensor::from_sparse(f, m, std::move(coords));
  if (t.is_zero())
    throw ParseError(line, column, "relation is identically zero");
  return t;
}

std::string rest_of(const std::vector<Tok>& toks, std::size_t from,
                    const std::string& line) {
  if (from >= toks.size()) return "";
  return line.substr(toks[from].column - 1);
}

std::string render_scalar_magnitude(const Scalar& s, bool* negative) {
  std::string t = s.to_string();
  *negative = !t.empty() && t[0] == '-';
  if (*negative) t.erase(0, 1);
  return t;
}

std::string render_relation(const Tensor& t, const GeneratorSet& gens) {
  std::string out;
  bool first = true;
  for (auto& [w, c] : t.coords()) {
    bool neg = false;
    std::string mag = render_scalar_magnitude(c, &neg);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (mag != "1") out += mag + "*";
    out += Word::render(w, t.degree(), gens);
  }
  return out;
}

std::string render_matrix(const Matrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? ",[" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ",";
      out += m.at(r, c).to_string();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace

const AlgebraBlock& Document::algebra(const std::string& name) const {
  for (auto& a : algebras)
    if (a.name == name) return a;
  throw std::out_of_range("no algebra named '" + name + "'");
}

Document parse_document(const std::string& text) {
  Document doc;
  std::istringstream in(text);
  std::string line;
  std::size_t ln = 0;

  AlgebraBlock* alg = nullptr;  // open block, points into doc.algebras
  TwistBlock* tw = nullptr;
  bool field_seen = false;

  auto require = [&](const std::vector<Tok>& toks, std::size_t n) {
    if (toks.size() != n)
      throw ParseError(ln, toks.empty() ? 1 : toks.back().column,
                       "expected " + std::to_string(n - 1) +
                           " argument(s) after '" + toks[0].text + "'");
  };

  while (std::getline(in, line)) {
    ++ln;
    auto toks = split_line(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;

    if (tw) {
      if (kw == "end") {
        require(toks, 1);
        const AlgebraBlock* target = nullptr;
        for (auto& a : doc.algebras)
          if (a.name == tw->on) target = &a;
        if (!target)
          throw ParseError(ln, toks[0].column,
                           "twist '" + tw->name + "' references unknown "
                           "algebra '" + tw->on + "'");
        if (!tw->power && tw->maps.empty())
          throw ParseError(ln, toks[0].column,
                           "twist block needs a 'power' or 'explicit' line");
        auto check = [&](const Matrix& m) {
          if (m.rows() != target->gens.size() ||
              m.cols() != target->gens.size())
            throw ParseError(ln, toks[0].column,
                             "twist matrix is " + std::to_string(m.rows()) +
                                 "x" + std::to_string(m.cols()) +
                                 ", expected " +
                                 std::to_string(target->gens.size()) +
                                 " generators square");
          if (!m.inverse())
            throw ParseError(ln, toks[0].column,
                             "non-invertible twist matrix");
        };
        if (tw->power) check(*tw->power);
        for (auto& [i, m] : tw->maps) check(m);
        tw = nullptr;
        continue;
      }
      if (kw == "power") {
        if (toks.size() < 2)
          throw ParseError(ln, toks[0].column, "expected a matrix");
        if (tw->power || !tw->maps.empty())
          throw ParseError(ln, toks[0].column,
                           "twist block already has degree-one data");
        tw->power = parse_matrix(doc.config.field, rest_of(toks, 1, line),
                                 ln, toks[1].column);
        continue;
      }
      if (kw == "explicit") {
        if (toks.size() < 3)
          throw ParseError(ln, toks[0].column,
                           "expected an index and a matrix");
        if (tw->power)
          throw ParseError(ln, toks[0].column,
                           "twist block already has one-parameter data");
        int idx = static_cast<int>(parse_long(toks[1], ln));
        if (tw->maps.count(idx))
          throw ParseError(ln, toks[1].column,
                           "duplicate explicit index " + std::to_string(idx));
        tw->maps.emplace(idx,
                         parse_matrix(doc.config.field,
                                      rest_of(toks, 2, line), ln,
                                      toks[2].column));
        continue;
      }
      throw ParseError(ln, toks[0].column,
                       "unknown directive '" + kw + "' in twist block");
    }

    if (alg) {
      if (kw == "end") {
        require(toks, 1);
        if (alg->gens.empty())
          throw ParseError(ln, toks[0].column, "algebra has no generators");
        if (alg->m < 2)
          throw ParseError(ln, toks[0].column,
                           "algebra needs 'deg <m>' with m >= 2");
        alg = nullptr;
        continue;
      }
      if (kw == "gens") {
        if (toks.size() < 2)
          throw ParseError(ln, toks[0].column,
                           "expected at least one generator name");
        if (!alg->gens.empty())
          throw ParseError(ln, toks[0].column, "duplicate 'gens' line");
        for (std::size_t i = 1; i < toks.size(); ++i) {
          if (looks_numeric(toks[i].text))
            throw ParseError(ln, toks[i].column,
                             "generator name '" + toks[i].text +
                                 "' starts with a digit");
          for (auto& g : alg->gens)
            if (g == toks[i].text)
              throw ParseError(ln, toks[i].column,
                               "duplicate generator '" + toks[i].text + "'");
          alg->gens.push_back(toks[i].text);
        }
        continue;
      }
      if (kw == "deg") {
        require(toks, 2);
        long m = parse_long(toks[1], ln);
        if (m < 2)
          throw ParseError(ln, toks[1].column,
                           "homogeneity degree must be >= 2");
        alg->m = static_cast<std::size_t>(m);
        continue;
      }
      if (kw == "rel") {
        if (toks.size() < 2)
          throw ParseError(ln, toks[0].column, "expected an expression");
        if (alg->gens.empty() || alg->m < 2)
          throw ParseError(ln, toks[0].column,
                           "'gens' and 'deg' must precede 'rel'");
        GeneratorSet gs(alg->gens);
        alg->relations.push_back(
            parse_relation(doc.config.field, gs, alg->m,
                           rest_of(toks, 1, line), ln, toks[1].column));
        continue;
      }
      throw ParseError(ln, toks[0].column,
                       "unknown directive '" + kw + "' in algebra block");
    }

    if (kw == "field") {
      if (toks.size() < 2)
        throw ParseError(ln, toks[0].column, "expected 'Q' or 'Fp <prime>'");
      if (field_seen)
        throw ParseError(ln, toks[0].column, "duplicate 'field' line");
      if (!doc.algebras.empty() || !doc.twists.empty())
        throw ParseError(ln, toks[0].column,
                         "'field' must precede all blocks");
      if (toks[1].text == "Q") {
        require(toks, 2);
        doc.config.field = Field::rationals();
      } else if (toks[1].text == "Fp") {
        require(toks, 3);
        std::uint64_t p = parse_u64(toks[2], ln);
        if (!is_prime(p))
          throw ParseError(ln, toks[2].column,
                           std::to_string(p) + " is not prime");
        doc.config.field = Field::prime(p);
      } else {
        throw ParseError(ln, toks[1].column,
                         "unknown field '" + toks[1].text + "'");
      }
      field_seen = true;
      continue;
    }
    if (kw == "cap") {
      require(toks, 2);
      long d = parse_long(toks[1], ln);
      if (d < 1)
        throw ParseError(ln, toks[1].column, "cap must be >= 1");
      doc.config.cap = static_cast<std::size_t>(d);
      continue;
    }
    if (kw == "window") {
      require(toks, 3);
      IndexWindow w{static_cast<int>(parse_long(toks[1], ln)),
                    static_cast<int>(parse_long(toks[2], ln))};
      if (w.lo > w.hi)
        throw ParseError(ln, toks[1].column, "window lo > hi");
      doc.config.window = w;
      continue;
    }
    if (kw == "seed") {
      require(toks, 2);
      doc.config.seed = parse_u64(toks[1], ln);
      continue;
    }
    if (kw == "algebra") {
      require(toks, 2);
      for (auto& a : doc.algebras)
        if (a.name == toks[1].text)
          throw ParseError(ln, toks[1].column,
                           "duplicate algebra '" + toks[1].text + "'");
      doc.algebras.push_back(AlgebraBlock{.name = toks[1].text});
      alg = &doc.algebras.back();
      continue;
    }
    if (kw == "twist") {
      if (toks.size() != 4 || toks[2].text != "on")
        throw ParseError(ln, toks[0].column,
                         "expected 'twist <name> on <algebra>'");
      for (auto& t : doc.twists)
        if (t.name == toks[1].text)
          throw ParseError(ln, toks[1].column,
                           "duplicate twist '" + toks[1].text + "'");
      doc.twists.push_back(
          TwistBlock{.name = toks[1].text, .on = toks[3].text});
      tw = &doc.twists.back();
      continue;
    }
    throw ParseError(ln, toks[0].column, "unknown directive '" + kw + "'");
  }
  if (alg)
    throw ParseError(ln, 1, "unterminated algebra block '" + alg->name + "'");
  if (tw)
    throw ParseError(ln, 1, "unterminated twist block '" + tw->name + "'");
  return doc;
}

std::string print_document(const Document& doc) {
  std::ostringstream os;
  if (doc.config.field.is_rational())
    os << "field Q\n";
  else
    os << "field Fp " << doc.config.field.prime_modulus() << "\n";
  os << "cap " << doc.config.cap << "\n";
  if (doc.config.window)
    os << "window " << doc.config.window->lo << " " << doc.config.window->hi
       << "\n";
  if (doc.config.seed) os << "seed " << doc.config.seed << "\n";
  for (auto& a : doc.algebras) {
    os << "algebra " << a.name << "\n";
    os << "  gens";
    for (auto& g : a.gens) os << " " << g;
    os << "\n  deg " << a.m << "\n";
    GeneratorSet gs(a.gens);
    for (auto& r : a.relations)
      os << "  rel " << render_relation(r, gs) << "\n";
    os << "end\n";
  }
  for (auto& t : doc.twists) {
    os << "twist " << t.name << " on " << t.on << "\n";
    if (t.power) os << "  power " << render_matrix(*t.power) << "\n";
    for (auto& [i, m] : t.maps)
      os << "  explicit " << i << " " << render_matrix(m) << "\n";
    os << "end\n";
  }
  return os.str();
}

AlgebraPtr build_algebra(const Document& doc, const AlgebraBlock& block) {
  return Algebra::make(doc.config.field, GeneratorSet(block.gens), block.m,
                       block.relations,
                       std::max<std::size_t>(doc.config.cap + block.m, 12));
}

TwistingSystem build_twist(const Document& doc, const TwistBlock& block,
                           IndexWindow window) {
  const AlgebraBlock& target = doc.algebra(block.on);
  GeneratorSet gs(target.gens);
  if (block.power) return TwistingSystem::one_parameter(gs, *block.power, window);
  IndexWindow w{0, 0};
  for (auto& [i, m] : block.maps) {
    w.lo = std::min(w.lo, i);
    w.hi = std::max(w.hi, i);
  }
  return TwistingSystem::explicit_maps(gs, block.maps, w);
}

}  // namespace twistkit
