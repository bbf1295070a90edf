#pragma once

#include "twistkit/manin.hpp"

namespace twistkit {

/// Symbolic presentation of the Hopf envelope of E = end^r(A), truncated at
/// antipode level K: generator families S^k(z_j^l) for 0 <= k <= K, the
/// twisted relation copies S^k(R) (word order reversed for odd k, since S
/// is an anti-algebra map), and the two antipode-pairing families obtained
/// by expanding M(id (x) S)Delta - u eps and M(S (x) id)Delta - u eps on
/// each generator copy.  No quotient computation is performed.
struct EnvelopePresentation {
  std::size_t level_cap = 0;
  std::vector<std::string> generators;       // all levels, deterministic order
  std::size_t twisted_per_level = 0;         // dim R(E)
  std::size_t antipode_per_level = 0;        // 2 n^2
  std::string text;                          // byte-stable dump
};

EnvelopePresentation emit_envelope(const EndR& endr, std::size_t level_cap);

/// Structural checks on the emitted presentation: generator count
/// (K+1) n^2, per-level family counts, and counit compatibility (eps kills
/// every emitted relation).
Report verify_envelope(const EnvelopePresentation& env, const EndR& endr);

}  // namespace twistkit
