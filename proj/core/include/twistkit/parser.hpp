#pragma once

#include <optional>

#include "twistkit/twisting.hpp"

namespace twistkit {

struct ParseError : std::runtime_error {
  std::size_t line;
  std::size_t column;
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
};

/// Session header of a presentation document.
struct SessionConfig {
  Field field = Field::rationals();
  std::size_t cap = 6;
  std::optional<IndexWindow> window;  // default [0, cap + m] per run
  std::uint64_t seed = 0;

  bool operator==(const SessionConfig&) const = default;
};

/// `algebra <name> ... end` block, validated but not yet quotiented.
struct AlgebraBlock {
  std::string name;
  std::vector<std::string> gens;
  std::size_t m = 0;
  std::vector<Tensor> relations;

  bool operator==(const AlgebraBlock&) const = default;
};

/// `twist <name> on <algebra> ... end` block.
struct TwistBlock {
  std::string name;
  std::string on;
  std::optional<Matrix> power;  // one-parameter form tau_i = phi^i
  std::map<int, Matrix> maps;   // explicit per-index matrices

  bool operator==(const TwistBlock&) const = default;
};

struct Document {
  SessionConfig config;
  std::vector<AlgebraBlock> algebras;
  std::vector<TwistBlock> twists;

  bool operator==(const Document&) const = default;

  const AlgebraBlock& algebra(const std::string& name) const;
};

/// Line-oriented grammar: `field Q|Fp <p>`, `cap <d>`, `window <lo> <hi>`,
/// `seed <u64>`, algebra and twist blocks; `#` starts a comment.  Throws
/// ParseError with line/column on malformed input.
Document parse_document(const std::string& text);

/// Canonical rendering; parse_document(print_document(d)) == d.
std::string print_document(const Document& doc);

AlgebraPtr build_algebra(const Document& doc, const AlgebraBlock& block);
/// Window defaults to [0, cap + m]; explicit systems keep only their
/// declared indices (plus 0).
TwistingSystem build_twist(const Document& doc, const TwistBlock& block,
                           IndexWindow window);

}  // namespace twistkit
